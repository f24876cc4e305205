"""
Hyperrectangle Pairing (n_v ≤ 2)
Kutunun iki karşıt köşesini bulup her koordinatta hangi uç noktanın hangi
köşeye ait olduğunu tek bir çağrıyla belirler.
"""
import logging
from fractions import Fraction
from typing import List

from src.domain.errors import BudgetExhausted, InconsistentOracle
from src.domain.geometry import Direction, Point
from src.domain.models import Algorithm, Branch
from src.services.oracles import CountingOracle, SupportOracle

from .dtos import ProbeRecord, ReconstructionReport, VertexBudget

logger = logging.getLogger(__name__)


def probe_box(counter: CountingOracle, trace: List[ProbeRecord], stage: str = "box"):
    """ℓ_i = −D(−e_i), u_i = D(e_i); 2n çağrı."""
    n = counter.dimension
    lower, upper = [], []
    for i in range(n):
        e = Direction.unit(n, i)
        u = counter.support(e)
        trace.append(ProbeRecord(counter.count, e, u, Branch.BOUND, stage=stage))
        neg = counter.support(-e)
        trace.append(ProbeRecord(counter.count, -e, neg, Branch.BOUND, stage=stage))
        if -neg > u:
            raise InconsistentOracle(f"ℓ_{i + 1} = {-neg} > u_{i + 1} = {u}", call_index=counter.count)
        lower.append(-neg)
        upper.append(u)
    return lower, upper


def reconstruct_nd_nf2(oracle: SupportOracle) -> ReconstructionReport:
    n = oracle.dimension
    counter = CountingOracle(oracle)
    trace: List[ProbeRecord] = []
    lower, upper = probe_box(counter, trace)

    if lower == upper:
        vertices = [Point(tuple(lower))]
    else:
        # pivot: ℓ_p < u_p olan ilk koordinat (yeniden etiketleme)
        pivot = next(i for i in range(n) if lower[i] < upper[i])
        width = upper[pivot] - lower[pivot]
        a, b = list(lower), list(upper)

        for i in range(n):
            if i == pivot or lower[i] == upper[i]:
                continue
            gap = upper[i] - lower[i]
            coeffs = [Fraction(0)] * n
            coeffs[pivot] = -gap / width
            coeffs[i] = Fraction(1)
            d = Direction(tuple(coeffs))
            level = d.dot(Point(tuple(a)))

            value = counter.support(d)
            if value == level + gap:
                a[i], b[i] = b[i], a[i]
            elif value != level:
                if value < level:
                    raise InconsistentOracle(
                        f"D{d} = {value} < dᵀa = {level}", call_index=counter.count
                    )
                raise BudgetExhausted(
                    f"D{d} = {value} ∉ {{{level}, {level + gap}}}: gizli küme ikiden fazla köşeli"
                )
            trace.append(ProbeRecord(counter.count, d, value, Branch.ASSIGN, stage=f"i={i + 1}"))

        vertices = sorted({Point(tuple(a)), Point(tuple(b))})

    logger.info(f"✅ [pairing] {len(vertices)} köşe, {counter.count} çağrı (n={n})")
    return ReconstructionReport(
        vertices=vertices,
        oracle_calls=counter.count,
        algorithm=Algorithm.NF2,
        dimension=n,
        budget=VertexBudget(2),
        trace=trace,
    )
