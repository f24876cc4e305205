"""
Planar Reconstruction (R²)
Tek sorumluluk: destek oracle'ından düzlemdeki politopun köşelerini bulmak.

Dış yaklaşım P ve iç yaklaşım S her adımda S ⊆ X ⊆ P olacak şekilde
daraltılır. Her döngü adımı üçlü (a, b, c) için tek bir çağrı yapar:
  - D(d) = dᵀb  → b doğrulanır
  - D(d) = dᵀa  → a ve c doğrulanır, b silinir
  - aksi halde  → b yerine L(d) üzerindeki b', c' gelir
"""
import logging
from typing import List, Optional

from src.domain.errors import BudgetExhausted, DimensionMismatch, InconsistentOracle, InvalidInitialization
from src.domain.geometry import (
    Direction,
    GeometryOutcome,
    Halfspace,
    Point,
    cross,
    generated_constraint_set_2d,
    outward_probe_direction,
    positively_spans_2d,
)
from src.domain.models import Algorithm, Branch, InitKind
from src.infrastructure.config import get_settings
from src.services.oracles import CountingOracle, SupportOracle

from .dtos import InitializationScheme, ProbeRecord, ProbeState2D, ReconstructionReport, VertexBudget

logger = logging.getLogger(__name__)


def classify_probe(a: Point, b: Point, direction: Direction, value) -> Branch:
    """Dal kararı; d ve D(d) aynı pozitif çarpanla ölçeklenirse değişmez."""
    lo, hi = direction.dot(a), direction.dot(b)
    if value < lo or value > hi:
        raise InconsistentOracle(
            f"D{direction} = {value}, beklenen aralık [{lo}, {hi}] (a={a}, b={b})"
        )
    if value == hi:
        return Branch.CONFIRM_B
    if value == lo:
        return Branch.CONFIRM_AC
    return Branch.SPLIT


class PlanarReconstructor:
    """
    Tek bir çalıştırmanın durumu.

    Oracle CountingOracle ile sarılır; rapordaki çağrı sayısı bu sayaçtan gelir.
    """

    def __init__(
        self,
        oracle: SupportOracle,
        budget: Optional[VertexBudget] = None,
        init: Optional[InitializationScheme] = None,
        early_stop: bool = True,
        check_invariants: Optional[bool] = None,
        stage: str = "planar"
    ):
        if oracle.dimension != 2:
            raise DimensionMismatch(2, oracle.dimension)
        self._oracle = CountingOracle(oracle)
        self.budget = budget or VertexBudget.infinite()
        self.init = init or InitializationScheme.paper_triangle()
        self.early_stop = early_stop
        self.check_invariants = get_settings().DEBUG if check_invariants is None else check_invariants
        self.stage = stage
        self.state = ProbeState2D()
        self.trace: List[ProbeRecord] = []
        self._loop_calls = 0
        self._loop_cap = self._compute_loop_cap()

    # =========================================================================
    # PUBLIC
    # =========================================================================

    def run(self) -> ReconstructionReport:
        self._initialize()
        while not self._finished():
            if self._try_early_stop():
                break
            self._step()

        vertices = sorted(self.state.confirmed)
        logger.info(
            f"✅ [{self.stage}] {len(vertices)} köşe bulundu, "
            f"{self._oracle.count} çağrı (bütçe={self.budget}, init={self.init.kind.value})"
        )
        return ReconstructionReport(
            vertices=vertices,
            oracle_calls=self._oracle.count,
            algorithm=Algorithm.R2,
            dimension=2,
            budget=self.budget,
            init=self.init.kind,
            init_size=self.init.size,
            early_stop=self.early_stop,
            trace=self.trace,
        )

    # =========================================================================
    # INITIALIZATION
    # =========================================================================

    def _compute_loop_cap(self) -> int:
        if not self.budget.is_finite:
            return get_settings().PROBE_LIMIT
        return 3 * self.budget.bound + 1 + max(0, self.init.size - 3)

    def _initialize(self) -> None:
        state = self.state
        pre_probed = self.init.kind == InitKind.PRE_PROBED
        normals = [h.normal for h in self.init.constraints] if pre_probed else list(self.init.directions)
        if not positively_spans_2d(normals):
            raise InvalidInitialization(
                f"Başlangıç yönleri düzlemi pozitif germiyor: {[str(n) for n in normals]}"
            )

        if pre_probed:
            state.history = list(self.init.constraints)
        else:
            for direction in self.init.directions:
                value = self._oracle.support(direction)
                state.history.append(Halfspace(direction, value))
                self._record(direction, value, Branch.INIT)

        polygon = generated_constraint_set_2d(state.history)
        if polygon is GeometryOutcome.UNBOUNDED:
            raise InvalidInitialization("Başlangıç kısıtları sınırsız küme üretti")
        state.outer = list(polygon.vertices)
        state.cursor = 0
        if self.trace:
            self._snapshot(self.trace[-1])

        # Tek nokta ya da doğru parçası: uç noktalar zaten gerçek köşeler
        if len(state.outer) <= 2:
            if self.budget.is_finite and len(state.outer) > self.budget.bound:
                raise BudgetExhausted(
                    f"Başlangıç P'si {len(state.outer)} köşeli, bütçe {self.budget.bound}"
                )
            state.confirmed = set(state.outer)
            logger.debug(f"🎯 [{self.stage}] Dejenere P başlangıçta çözüldü: {len(state.outer)} köşe")
            return

        if self.budget.bound == 1:
            raise BudgetExhausted("Bütçe 1 fakat başlangıç P'si tek nokta değil (n_v > 1)")

    # =========================================================================
    # MAIN LOOP
    # =========================================================================

    def _finished(self) -> bool:
        if self.budget.is_finite and len(self.state.confirmed) >= self.budget.bound:
            return True
        return self.state.is_complete()

    def _try_early_stop(self) -> bool:
        """
        |S_v| = n̄f − 1 iken doğrulanmış köşeye değmeyen iki komşu kenar varsa,
        ortak uçları son köşedir.
        """
        if not self.early_stop or not self.budget.is_finite:
            return False
        if len(self.state.confirmed) != self.budget.bound - 1:
            return False

        ring, confirmed = self.state.outer, self.state.confirmed
        m = len(ring)
        if m < 3:
            return False
        open_edges = {
            i for i in range(m)
            if ring[i] not in confirmed and ring[(i + 1) % m] not in confirmed
        }
        for i in sorted(open_edges):
            if (i + 1) % m in open_edges:
                final = ring[(i + 1) % m]
                confirmed.add(final)
                logger.debug(f"⚡ [{self.stage}] Erken durma: son köşe {final} çağrısız eklendi")
                return True
        return False

    def _step(self) -> None:
        state = self.state
        ring = state.outer
        m = len(ring)
        i = state.cursor % m
        a, b, c = ring[i], ring[(i + 1) % m], ring[(i + 2) % m]

        if b in state.confirmed:
            state.cursor = (i + 1) % m
            return

        if self._loop_calls >= self._loop_cap:
            raise InconsistentOracle(
                f"Sert çağrı sınırı aşıldı ({self._loop_cap} döngü çağrısı): "
                f"yeni köşe bulunamıyor, algoritma tıkandı",
                call_index=self._oracle.count,
            )

        direction = outward_probe_direction(a, b, c)
        value = self._oracle.support(direction)
        self._loop_calls += 1
        call_index = self._oracle.count

        try:
            branch = classify_probe(a, b, direction, value)
        except InconsistentOracle as e:
            raise InconsistentOracle(f"Çağrı #{call_index}: {e}", call_index=call_index) from e

        constraint = Halfspace(direction, value)
        cut = sorted(s for s in state.confirmed if not constraint.contains(s))
        if cut:
            raise InconsistentOracle(
                f"Çağrı #{call_index}: {constraint} kısıtı doğrulanmış köşe {cut[0]} noktasını kesiyor",
                call_index=call_index,
            )
        state.history.append(constraint)

        # halkayı a'dan başlat: [a, b, c, ...]
        anchored = ring[i:] + ring[:i]
        if branch == Branch.CONFIRM_B:
            state.confirmed.add(b)
            state.cursor = (i + 1) % m
        elif branch == Branch.CONFIRM_AC:
            merged = state.confirmed | {a, c}
            if self.budget.is_finite and len(merged) > self.budget.bound:
                raise BudgetExhausted(
                    f"Çağrı #{call_index}: {len(merged)} doğrulanmış köşe, bütçe {self.budget.bound}"
                )
            state.confirmed = merged
            state.outer = anchored[:1] + anchored[2:]
            state.cursor = 1
        else:
            t = (value - direction.dot(a)) / (direction.dot(b) - direction.dot(a))
            b_new = a + (b - a).scaled(t)
            c_new = c + (b - c).scaled(t)
            state.outer = [a, b_new, c_new] + anchored[2:]
            state.cursor = 0

        logger.debug(f"🔀 [{self.stage}] #{call_index} {branch.value}: d={direction}, D={value}")
        self._record(direction, value, branch, snapshot=True)

        if self.check_invariants:
            self._assert_invariants()

    # =========================================================================
    # HELPERS
    # =========================================================================

    def _record(self, direction: Direction, value, branch: Branch, snapshot: bool = False) -> None:
        record = ProbeRecord(
            index=self._oracle.count,
            direction=direction,
            value=value,
            branch=branch,
            stage=self.stage,
        )
        if snapshot:
            self._snapshot(record)
        self.trace.append(record)

    def _snapshot(self, record: ProbeRecord) -> None:
        record.outer_vertices = list(self.state.polygon().vertices)
        record.confirmed_vertices = sorted(self.state.confirmed)

    def _assert_invariants(self) -> None:
        state = self.state
        if not state.confirmed <= set(state.outer):
            raise AssertionError("S_v ⊄ P_v")
        m = len(state.outer)
        if m >= 3:
            for k in range(m):
                if cross(state.outer[k], state.outer[(k + 1) % m], state.outer[(k + 2) % m]) >= 0:
                    raise AssertionError(f"P saat yönünde ve kesin dışbükey değil: {state.outer}")
        rebuilt = generated_constraint_set_2d(state.history)
        if rebuilt != state.polygon():
            raise AssertionError(f"P ≠ H(history): {state.polygon()} vs {rebuilt}")
        for s in state.confirmed:
            if not all(h.contains(s) for h in state.history):
                raise AssertionError(f"Doğrulanmış köşe {s} bir kısıtı ihlal ediyor")


def reconstruct_2d(
    oracle: SupportOracle,
    budget: Optional[VertexBudget] = None,
    init: Optional[InitializationScheme] = None,
    early_stop: bool = True,
    check_invariants: Optional[bool] = None,
    stage: str = "planar"
) -> ReconstructionReport:
    """R²'deki gizli politopun köşelerini bulur."""
    return PlanarReconstructor(
        oracle,
        budget=budget,
        init=init,
        early_stop=early_stop,
        check_invariants=check_invariants,
        stage=stage,
    ).run()
