"""
Verification
Bağımsız doğruluk kontrolleri: köşe kümesi kanonikleştirme, destek
fonksiyonu denkliği ve çağrı sayısı denetimi (sınır tablosu veriden okunur).
"""
import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import List, Optional, Sequence

from src.domain.geometry import Direction, Point, cross
from src.domain.linalg import extreme_points
from src.infrastructure.config import get_settings
from src.services.oracles import SupportOracle
from src.services.reconstruct.dtos import ProbeRecord, ReconstructionReport, VertexBudget

logger = logging.getLogger(__name__)


# =============================================================================
# VERTEX SETS
# =============================================================================

def canonical_vertices_nd(points: Sequence[Point]) -> List[Point]:
    """Dışbükey zarfın köşeleri, sözlük sırasıyla."""
    if not points:
        raise ValueError("En az bir nokta gerekli")
    return extreme_points(points)


def support_equivalent(a: Sequence[Point], b: Sequence[Point], directions: Sequence[Direction]) -> bool:
    if not directions:
        raise ValueError("En az bir yön gerekli")
    return all(
        max(p.dot(d) for p in a) == max(q.dot(d) for q in b)
        for d in directions
    )


def replay_trace(records: Sequence[ProbeRecord], oracle: SupportOracle) -> Optional[int]:
    """İzdeki her yönü tekrar sorar; ilk uyuşmayan çağrının indeksini döner."""
    for record in records:
        if oracle.support(record.direction) != record.value:
            return record.index
    return None


def _inside_polygon_2d(point: Point, ring: Sequence[Point]) -> bool:
    if len(ring) == 1:
        return point == ring[0]
    if len(ring) == 2:
        a, b = ring
        return (
            cross(a, b, point) == 0
            and min(a[0], b[0]) <= point[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= point[1] <= max(a[1], b[1])
        )
    m = len(ring)
    turns = {cross(ring[k], ring[(k + 1) % m], point) for k in range(m)}
    return not (any(t > 0 for t in turns) and any(t < 0 for t in turns))


def sandwich_violation(records: Sequence[ProbeRecord], hidden: Sequence[Point]) -> Optional[int]:
    """
    2-B izi gizli kümeye karşı denetler: her anlık görüntüde X ⊆ P ve S_v ⊆ X_v.
    İlk ihlal eden kaydın indeksini döner; anlık görüntüsü olmayan kayıtlar atlanır.
    """
    hidden_set = set(hidden)
    for record in records:
        if not record.outer_vertices:
            continue
        if not all(_inside_polygon_2d(x, record.outer_vertices) for x in hidden):
            return record.index
        if not set(record.confirmed_vertices) <= hidden_set:
            return record.index
    return None


# =============================================================================
# CALL-COUNT AUDIT
# =============================================================================

@dataclass(frozen=True)
class BoundRule:
    """Sınır tablosunun bir satırı."""
    key: str
    algorithm: str
    budget: str
    source: str
    per_n: int = 0
    per_nv: int = 0
    const: int = 0
    n_v: Optional[int] = None
    init: Optional[str] = None
    init_surcharge: bool = False
    requires_early_stop: bool = False

    def matches(self, report: ReconstructionReport, n_v: int) -> bool:
        if self.algorithm != report.algorithm.value:
            return False
        if self.n_v is not None and self.n_v != n_v:
            return False
        if self.init is not None and self.init != report.init.value:
            return False
        if self.requires_early_stop and not report.early_stop:
            return False
        return _budget_relation_matches(self.budget, report.budget, n_v)


def _budget_relation_matches(relation: str, budget: VertexBudget, n_v: int) -> bool:
    if relation == "any":
        return True
    if relation == "one":
        return budget.bound == 1
    if relation == "equal":
        return budget.bound == n_v
    if relation == "greater":
        return not budget.is_finite or budget.bound > n_v
    raise ValueError(f"Bilinmeyen bütçe ilişkisi: {relation}")


@dataclass(frozen=True)
class AuditRow:
    dimension: int
    n_v: int
    budget: VertexBudget
    bound: int
    source: str
    key: str = ""


@dataclass(frozen=True)
class AuditResult:
    passed: bool
    calls: int
    bound: int
    details: str = ""

    @property
    def label(self) -> str:
        return "pass" if self.passed else "fail"


@lru_cache(maxsize=4)
def load_bound_rules(path: Optional[Path] = None) -> List[BoundRule]:
    path = Path(path or get_settings().CALL_BOUNDS_PATH)
    with open(path, "r", encoding="utf-8") as f:
        payload = json.load(f)
    rules = [BoundRule(**row) for row in payload["rows"]]
    logger.debug(f"📋 {len(rules)} sınır kuralı yüklendi: {path}")
    return rules


def audit_row_for(report: ReconstructionReport, n_v: Optional[int] = None) -> Optional[AuditRow]:
    """Rapora uyan ilk tablo satırı; uyan yoksa None."""
    n_v = len(report.vertices) if n_v is None else n_v
    for rule in load_bound_rules():
        if rule.matches(report, n_v):
            bound = rule.per_n * report.dimension + rule.per_nv * n_v + rule.const
            if rule.init_surcharge:
                bound += max(0, report.init_size - 3)
            return AuditRow(
                dimension=report.dimension,
                n_v=n_v,
                budget=report.budget,
                bound=bound,
                source=rule.source,
                key=rule.key,
            )
    return None


def audit_calls(report: ReconstructionReport, row: AuditRow) -> AuditResult:
    passed = report.oracle_calls <= row.bound
    details = f"{report.oracle_calls} çağrı, sınır {row.bound} ({row.source})"
    if not passed:
        logger.warning(f"⚠️ Denetim başarısız: {details}")
    return AuditResult(passed=passed, calls=report.oracle_calls, bound=row.bound, details=details)
