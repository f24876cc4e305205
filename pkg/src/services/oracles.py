"""
Support-Function Oracles
Tek sorumluluk: D(d) = max_{v ∈ X} vᵀd değerini üretmek.

Algoritmalar sadece SupportOracle protocol'üne bağımlıdır; testte herhangi
bir nesne (mock dahil) geçilebilir.
"""
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Protocol, Sequence, Tuple

from src.domain.errors import DimensionMismatch
from src.domain.geometry import Direction, Point, ScalarLike, to_scalar
from src.domain.linalg import extreme_points
from src.infrastructure.config import get_settings

logger = logging.getLogger(__name__)


class SupportOracle(Protocol):
    """Oracle interface'i (Dependency Inversion)."""
    dimension: int

    def support(self, direction: Direction) -> Fraction: ...


def _ensure_dimension(direction: Direction, n: int) -> None:
    if len(direction) != n:
        raise DimensionMismatch(n, len(direction))


def support(oracle: SupportOracle, direction: Direction) -> Fraction:
    """Boyut kontrolü yapan serbest fonksiyon."""
    _ensure_dimension(direction, oracle.dimension)
    return oracle.support(direction)


# ============================================================================
# EXACT ORACLES
# ============================================================================

class VertexListOracle:
    """Gizli köşe listesi üzerinden kesin destek fonksiyonu."""

    def __init__(self, vertices: Sequence[Point]):
        if not vertices:
            raise ValueError("Köşe listesi boş olamaz")
        self.dimension = len(vertices[0])
        for v in vertices:
            if len(v) != self.dimension:
                raise DimensionMismatch(self.dimension, len(v))
        self.vertices: Tuple[Point, ...] = tuple(vertices)

    def support(self, direction: Direction) -> Fraction:
        _ensure_dimension(direction, self.dimension)
        return max(v.dot(direction) for v in self.vertices)

    def __repr__(self) -> str:
        return f"VertexListOracle(n={self.dimension}, |X_v|≤{len(self.vertices)})"


@dataclass(frozen=True)
class AffinePiece:
    """f_i(x) = gradientᵀx + offset"""
    gradient: Point
    offset: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "offset", to_scalar(self.offset))

    def value(self, x: Point) -> Fraction:
        return self.gradient.dot(x) + self.offset


class FiniteMaxOracle:
    """
    f = max f_i fonksiyonunun x̄ noktasındaki alt-diferansiyeli.

    Yönlü türev, aktif gradyanların destek fonksiyonudur:
    df(x̄; d) = max_{i ∈ A(x̄)} ∇f_iᵀd.
    """

    def __init__(self, pieces: Sequence[AffinePiece], anchor: Point):
        if not pieces:
            raise ValueError("En az bir affine parça gerekli")
        self.dimension = len(anchor)
        for piece in pieces:
            if len(piece.gradient) != self.dimension:
                raise DimensionMismatch(self.dimension, len(piece.gradient))
        self.pieces: Tuple[AffinePiece, ...] = tuple(pieces)
        self.anchor = anchor
        self._active = self.active_set()
        self._active_gradients = [self.pieces[i].gradient for i in self._active]

    def active_set(self) -> List[int]:
        """A(x̄): maksimumu veren parçaların (0 tabanlı) indeksleri."""
        values = [p.value(self.anchor) for p in self.pieces]
        top = max(values)
        return [i for i, v in enumerate(values) if v == top]

    def subdifferential_vertices(self) -> List[Point]:
        return extreme_points(self._active_gradients)

    def support(self, direction: Direction) -> Fraction:
        _ensure_dimension(direction, self.dimension)
        return max(g.dot(direction) for g in self._active_gradients)


# ============================================================================
# WRAPPERS
# ============================================================================

class CountingOracle:
    """Çağrı sayacı + log. Değerleri değiştirmeden iletir."""

    def __init__(self, inner: SupportOracle):
        self.inner = inner
        self.dimension = inner.dimension
        self.log: List[Tuple[Direction, Fraction]] = []

    @property
    def count(self) -> int:
        return len(self.log)

    def support(self, direction: Direction) -> Fraction:
        _ensure_dimension(direction, self.dimension)
        value = self.inner.support(direction)
        self.log.append((direction, value))
        logger.debug(f"🔎 D{direction} = {value} (çağrı #{self.count})")
        return value


class NoisyOracle:
    """
    D^ε(d) = D(d) + ξ, |ξ| < ε.

    ξ seed'li bir ızgaradan çekilir: ξ = ε·k / grid, k ∈ (−grid, grid).
    Pozitif homojenlik ve alt-toplamsallık bu sarmalayıcıda GEÇERLİ DEĞİLDİR.
    """

    def __init__(
        self,
        inner: SupportOracle,
        epsilon: ScalarLike,
        seed: Optional[int] = None,
        grid: Optional[int] = None
    ):
        self.inner = inner
        self.dimension = inner.dimension
        self.epsilon = to_scalar(epsilon)
        if self.epsilon < 0:
            raise ValueError(f"epsilon negatif olamaz: {self.epsilon}")
        settings = get_settings()
        self.seed = settings.SEED if seed is None else seed
        self.grid = grid or settings.NOISE_GRID
        self._rng = random.Random(self.seed)
        self.noise_log: List[Fraction] = []

    def _draw(self) -> Fraction:
        k = self._rng.randrange(-self.grid + 1, self.grid)
        return self.epsilon * Fraction(k, self.grid)

    def support(self, direction: Direction) -> Fraction:
        _ensure_dimension(direction, self.dimension)
        xi = self._draw()
        self.noise_log.append(xi)
        return self.inner.support(direction) + xi


class CoordinateProjectionOracle:
    """X'in ilk k koordinata izdüşümü: d sıfırlarla doldurulup iç oracle'a sorulur."""

    def __init__(self, inner: SupportOracle, k: int):
        if not 1 <= k <= inner.dimension:
            raise ValueError(f"k 1 ile {inner.dimension} arasında olmalı, gelen {k}")
        self.inner = inner
        self.dimension = k

    def support(self, direction: Direction) -> Fraction:
        _ensure_dimension(direction, self.dimension)
        return self.inner.support(direction.padded(self.inner.dimension))


class PlanarSectionOracle:
    """
    Düzlem {x¹ + s(x² − x¹) + t·e_k} üzerinde (s, t) koordinatlarında 2-B oracle.

    w = (x² − x¹)/‖x² − x¹‖² ile
    support₂(g_s, g_t) = D(g_s·w + g_t·e_k) − g_s·wᵀx¹.
    """

    def __init__(self, inner: SupportOracle, base: Point, tip: Point, axis: int):
        n = inner.dimension
        if len(base) != n or len(tip) != n:
            raise DimensionMismatch(n, len(base) if len(base) != n else len(tip))
        if not 0 <= axis < n:
            raise ValueError(f"Eksen indeksi 0 ile {n - 1} arasında olmalı, gelen {axis}")
        if base == tip:
            raise ValueError("Taban ve uç noktası aynı olamaz")
        if any(base[j] != 0 or tip[j] != 0 for j in range(axis, n)):
            raise ValueError(f"Taban/uç noktaları {axis}. koordinattan itibaren sıfır olmalı")

        self.inner = inner
        self.dimension = 2
        self.base = base
        self.tip = tip
        self.axis = axis
        span = (tip - base).as_direction()
        self._w = span.scaled(1 / span.dot(span))
        self._w_base = self._w.dot(base)
        self._e = Direction.unit(n, axis)

    def lift_direction(self, direction: Direction) -> Direction:
        return self._w.scaled(direction[0]) + self._e.scaled(direction[1])

    def support(self, direction: Direction) -> Fraction:
        _ensure_dimension(direction, 2)
        return self.inner.support(self.lift_direction(direction)) - direction[0] * self._w_base

    def lift_point(self, plane_point: Point) -> Point:
        """(s, t) → x¹ + s(x² − x¹) + t·e_k"""
        s, t = plane_point
        return self.base + (self.tip - self.base).scaled(s) + self._e.as_point().scaled(t)
