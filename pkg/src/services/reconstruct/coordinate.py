"""
Coordinate Probing
R¹ aralığı ve tek köşeli (n̄f = 1) durum: sadece birim vektörlerle çağrı.
"""
import logging

from src.domain.errors import DimensionMismatch, InconsistentOracle
from src.domain.geometry import Direction, Point
from src.domain.models import Algorithm, Branch
from src.services.oracles import CountingOracle, SupportOracle

from .dtos import ProbeRecord, ReconstructionReport, VertexBudget

logger = logging.getLogger(__name__)


def reconstruct_1d(oracle: SupportOracle, budget: VertexBudget = VertexBudget()) -> ReconstructionReport:
    """X = [−D(−1), D(1)]; bütçe 1 ise tek çağrı yeter."""
    if oracle.dimension != 1:
        raise DimensionMismatch(1, oracle.dimension)
    counter = CountingOracle(oracle)
    trace = []

    e = Direction.of(1)
    upper = counter.support(e)
    trace.append(ProbeRecord(counter.count, e, upper, Branch.BOUND, stage="interval"))

    if budget.bound == 1:
        vertices = [Point((upper,))]
    else:
        lower = -counter.support(-e)
        trace.append(ProbeRecord(counter.count, -e, -lower, Branch.BOUND, stage="interval"))
        if lower > upper:
            raise InconsistentOracle(f"−D(−1) = {lower} > D(1) = {upper}", call_index=counter.count)
        vertices = [Point((upper,))] if lower == upper else [Point((lower,)), Point((upper,))]

    logger.info(f"✅ [interval] {len(vertices)} köşe, {counter.count} çağrı")
    return ReconstructionReport(
        vertices=vertices,
        oracle_calls=counter.count,
        algorithm=Algorithm.R1,
        dimension=1,
        budget=budget,
        trace=trace,
    )


def reconstruct_nf1(oracle: SupportOracle) -> ReconstructionReport:
    """n_v = 1 varsayımı: köşe = (D(e₁), ..., D(e_n)), tam n çağrı."""
    n = oracle.dimension
    counter = CountingOracle(oracle)
    trace = []
    coords = []
    for j in range(n):
        e = Direction.unit(n, j)
        value = counter.support(e)
        coords.append(value)
        trace.append(ProbeRecord(counter.count, e, value, Branch.BOUND, stage="coordinate"))

    return ReconstructionReport(
        vertices=[Point(tuple(coords))],
        oracle_calls=counter.count,
        algorithm=Algorithm.NF1,
        dimension=n,
        budget=VertexBudget(1),
        trace=trace,
    )
