"""
Projection Lifting (n_v ≤ 3)
İlk iki koordinata izdüşümü düzlem algoritmasıyla çözer, sonra koordinatları
birer birer ekleyerek köşeleri yükseltir.

k. koordinat eklenirken izdüşümün köşe sayısına göre:
  1 köşe → iki uca kopyala (0 ek çağrı)
  2 köşe → dilim düzleminde düzlem algoritması (hazır dikdörtgen, ≤ 5 ek çağrı)
  3 köşe → her köşenin yüksekliği tek çağrıyla (3 ek çağrı)
"""
import logging
from fractions import Fraction
from typing import List

from src.domain.errors import InconsistentOracle, SingularLift, UnsupportedProblem
from src.domain.geometry import Direction, GeometryOutcome, Halfspace, Point
from src.domain.linalg import solve_linear
from src.domain.models import Algorithm, Branch
from src.services.oracles import CoordinateProjectionOracle, CountingOracle, PlanarSectionOracle, SupportOracle

from .dtos import InitializationScheme, ProbeRecord, ReconstructionReport, VertexBudget
from .planar import reconstruct_2d

logger = logging.getLogger(__name__)


class ProjectionLifter:
    """Tek bir çalıştırma; tüm alt çalıştırmalar aynı sayaçtan geçer."""

    def __init__(self, oracle: SupportOracle, early_stop: bool = True):
        if oracle.dimension < 2:
            raise UnsupportedProblem("Kaldırma algoritması n ≥ 2 gerektirir")
        self.n = oracle.dimension
        self.counter = CountingOracle(oracle)
        self.early_stop = early_stop
        self.trace: List[ProbeRecord] = []

    def run(self) -> ReconstructionReport:
        base_oracle = CoordinateProjectionOracle(self.counter, 2)
        offset = self.counter.count
        base = reconstruct_2d(base_oracle, VertexBudget(3), early_stop=self.early_stop, stage="k=2")
        self._merge(base.trace, offset)
        points = [v.padded(self.n) for v in base.vertices]

        for axis in range(2, self.n):
            points = self._lift(points, axis)

        vertices = sorted(set(points))
        logger.info(f"✅ [lifting] {len(vertices)} köşe, {self.counter.count} çağrı (n={self.n})")
        return ReconstructionReport(
            vertices=vertices,
            oracle_calls=self.counter.count,
            algorithm=Algorithm.NF3,
            dimension=self.n,
            budget=VertexBudget(3),
            early_stop=self.early_stop,
            trace=self.trace,
        )

    # =========================================================================
    # LIFT ONE COORDINATE
    # =========================================================================

    def _lift(self, points: List[Point], axis: int) -> List[Point]:
        stage = f"k={axis + 1}"
        e = Direction.unit(self.n, axis)
        upper = self._probe(e, stage)
        lower = -self._probe(-e, stage)
        if lower > upper:
            raise InconsistentOracle(f"ℓ_{axis + 1} = {lower} > u_{axis + 1} = {upper}", self.counter.count)

        if lower == upper:
            return [p.with_coord(axis, lower) for p in points]
        if len(points) == 1:
            return [points[0].with_coord(axis, lower), points[0].with_coord(axis, upper)]
        if len(points) == 2:
            return self._lift_pair(points, axis, lower, upper, stage)
        if len(points) == 3:
            return self._lift_triple(points, axis, lower, upper, stage)
        raise UnsupportedProblem(f"İzdüşüm {len(points)} köşeli; en fazla 3 desteklenir")

    def _lift_pair(self, points, axis, lower, upper, stage) -> List[Point]:
        """Dilim düzleminde (s, t) ∈ [0,1] × [ℓ, u] dikdörtgeninden başla."""
        section = PlanarSectionOracle(self.counter, points[0], points[1], axis)
        rectangle = InitializationScheme.pre_probed([
            Halfspace(Direction.of(-1, 0), 0),
            Halfspace(Direction.of(1, 0), 1),
            Halfspace(Direction.of(0, -1), -lower),
            Halfspace(Direction.of(0, 1), upper),
        ])
        offset = self.counter.count
        sub = reconstruct_2d(
            section, VertexBudget(3), rectangle, early_stop=self.early_stop, stage=f"{stage}/section"
        )
        self._merge(sub.trace, offset)
        return [section.lift_point(v) for v in sub.vertices]

    def _lift_triple(self, points, axis, lower, upper, stage) -> List[Point]:
        """
        dᵀ(xⁱ − xʲ + (u − ℓ)e_k) = [i = j] çözülür; D(d) − dᵀ(xʲ + ℓe_k)
        değeri [0, 1] aralığındadır ve (t_j − ℓ)/(u − ℓ) eşittir.
        """
        gap = upper - lower
        heights = []
        for j, xj in enumerate(points):
            matrix = []
            for xi in points:
                diff = xi - xj
                matrix.append([diff[m] + (gap if m == axis else 0) for m in range(axis + 1)])
            rhs = [1 if i == j else 0 for i in range(len(points))]
            solution = solve_linear(matrix, rhs)
            if solution is GeometryOutcome.INFEASIBLE:
                raise SingularLift(f"{stage}: köşe {j + 1} için sistem çözümsüz (izdüşüm köşeleri doğrusal?)")

            d = Direction(tuple(solution.point) + (Fraction(0),) * (self.n - axis - 1))
            value = self._probe(d, stage, Branch.CASE_III)
            relative = value - d.dot(xj.with_coord(axis, lower))
            if relative < 0 or relative > 1:
                raise InconsistentOracle(
                    f"{stage}: göreli değer {relative} ∉ [0, 1] (köşe {j + 1})", self.counter.count
                )
            heights.append(lower + relative * gap)

        return [p.with_coord(axis, h) for p, h in zip(points, heights)]

    # =========================================================================
    # HELPERS
    # =========================================================================

    def _probe(self, direction: Direction, stage: str, branch: Branch = Branch.BOUND) -> Fraction:
        value = self.counter.support(direction)
        self.trace.append(ProbeRecord(self.counter.count, direction, value, branch, stage=stage))
        return value

    def _merge(self, records: List[ProbeRecord], offset: int) -> None:
        """Alt çalıştırma kayıtlarını gerçek n-boyutlu yön/değerlerle birleştir."""
        for record in records:
            index = offset + record.index
            direction, value = self.counter.log[index - 1]
            self.trace.append(ProbeRecord(index, direction, value, record.branch, stage=record.stage))


def reconstruct_nd_nf3(oracle: SupportOracle, early_stop: bool = True) -> ReconstructionReport:
    return ProjectionLifter(oracle, early_stop=early_stop).run()
