"""
Algorithm Dispatcher
(boyut, bütçe) çiftine göre algoritma seçer. CLI, API ve bench tek giriş
noktası olarak bunu kullanır.
"""
import logging
from typing import Optional

from src.domain.errors import UnsupportedProblem
from src.domain.models import Algorithm
from src.services.oracles import SupportOracle

from .coordinate import reconstruct_1d, reconstruct_nf1
from .dtos import InitializationScheme, ReconstructionReport, VertexBudget
from .lifting import reconstruct_nd_nf3
from .pairing import reconstruct_nd_nf2
from .planar import reconstruct_2d

logger = logging.getLogger(__name__)

OPEN_PROBLEM_MESSAGE = (
    "n ≥ 3 boyutta n̄f ≥ 4 (veya bilinmeyen) köşe bütçesi desteklenmiyor: "
    "bu durum için yöntem bilinmiyor (the problem is still open)"
)


def select_algorithm(dimension: int, budget: VertexBudget) -> Algorithm:
    """auto seçimi: n=1 → r1, n̄f=1 → nf1, n=2 → r2, n̄f=2/3 → nf2/nf3."""
    if dimension == 1:
        return Algorithm.R1
    if budget.bound == 1:
        return Algorithm.NF1
    if dimension == 2:
        return Algorithm.R2
    if budget.bound == 2:
        return Algorithm.NF2
    if budget.bound == 3:
        return Algorithm.NF3
    raise UnsupportedProblem(OPEN_PROBLEM_MESSAGE)


def _check_compatible(algorithm: Algorithm, dimension: int) -> None:
    if algorithm == Algorithm.R1 and dimension != 1:
        raise UnsupportedProblem(f"r1 sadece n = 1 için, gelen n = {dimension}")
    if algorithm == Algorithm.R2 and dimension != 2:
        raise UnsupportedProblem(f"r2 sadece n = 2 için, gelen n = {dimension}")
    if algorithm == Algorithm.NF3 and dimension < 2:
        raise UnsupportedProblem("nf3 en az n = 2 gerektirir")


def run_reconstruction(
    oracle: SupportOracle,
    algorithm: Algorithm = Algorithm.AUTO,
    budget: Optional[VertexBudget] = None,
    init: Optional[InitializationScheme] = None,
    early_stop: bool = True,
    check_invariants: Optional[bool] = None
) -> ReconstructionReport:
    budget = budget or VertexBudget.infinite()
    algorithm = Algorithm(algorithm)
    if algorithm == Algorithm.AUTO:
        algorithm = select_algorithm(oracle.dimension, budget)
        logger.info(f"🧭 auto → {algorithm.value} (n={oracle.dimension}, bütçe={budget})")
    _check_compatible(algorithm, oracle.dimension)

    if init is not None and algorithm != Algorithm.R2:
        logger.warning(f"⚠️ init şeması sadece r2 için geçerli, {algorithm.value} için yok sayıldı")

    if algorithm == Algorithm.R1:
        return reconstruct_1d(oracle, budget)
    if algorithm == Algorithm.R2:
        return reconstruct_2d(
            oracle, budget=budget, init=init, early_stop=early_stop, check_invariants=check_invariants
        )
    if algorithm == Algorithm.NF1:
        return reconstruct_nf1(oracle)
    if algorithm == Algorithm.NF2:
        return reconstruct_nd_nf2(oracle)
    return reconstruct_nd_nf3(oracle, early_stop=early_stop)
