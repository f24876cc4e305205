"""
Domain Layer: Exact Geometry
Rational scalars, points, directions, halfspaces and 2-D polygon machinery.
Every operation is exact (fractions.Fraction); no floating point is involved.
"""
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple, Union

from src.domain.errors import DegenerateTriple, DimensionMismatch, EmptyIntersection

# ============================================================================
# SCALARS
# ============================================================================

ExactScalar = Fraction

ScalarLike = Union[int, str, Fraction]


def to_scalar(value: ScalarLike) -> Fraction:
    """
    Parse an exact rational.

    Accepts int, Fraction, Decimal, "p/q" or a finite decimal string.
    Floats and booleans are rejected: they are not exact encodings.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"Kesin olmayan sayı reddedildi: {value!r} (int, 'p/q' veya ondalık string kullanın)")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Decimal)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                return Fraction(text)
            return Fraction(Decimal(text))
        except (ValueError, ZeroDivisionError, OverflowError, InvalidOperation) as e:
            raise ValueError(f"Geçersiz rasyonel sayı: {value!r}") from e
    raise ValueError(f"Desteklenmeyen sayı tipi: {type(value).__name__}")


def format_scalar(value: Fraction) -> Union[int, str]:
    """JSON encoding: integers stay integers, everything else becomes 'p/q'."""
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


# ============================================================================
# VECTORS
# ============================================================================

@dataclass(frozen=True, order=True)
class _Vector:
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(to_scalar(c) for c in self.coords))
        if not self.coords:
            raise ValueError("Vektör en az bir bileşen içermeli")

    @classmethod
    def of(cls, *values: ScalarLike):
        return cls(tuple(values))

    @classmethod
    def zeros(cls, n: int):
        return cls((Fraction(0),) * n)

    @property
    def dimension(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, index: int) -> Fraction:
        return self.coords[index]

    def __iter__(self):
        return iter(self.coords)

    def _check(self, other: "_Vector") -> None:
        if len(other.coords) != len(self.coords):
            raise DimensionMismatch(len(self.coords), len(other.coords))

    def dot(self, other: "_Vector") -> Fraction:
        self._check(other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def __add__(self, other: "_Vector"):
        self._check(other)
        return type(self)(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "_Vector"):
        self._check(other)
        return type(self)(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return type(self)(tuple(-a for a in self.coords))

    def scaled(self, factor: ScalarLike):
        k = to_scalar(factor)
        return type(self)(tuple(k * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def padded(self, n: int):
        """Zero-pad to dimension n."""
        if n < len(self.coords):
            raise DimensionMismatch(n, len(self.coords))
        return type(self)(self.coords + (Fraction(0),) * (n - len(self.coords)))

    def truncated(self, k: int):
        """Keep the first k coordinates."""
        return type(self)(self.coords[:k])

    def with_coord(self, index: int, value: ScalarLike):
        coords = list(self.coords)
        coords[index] = to_scalar(value)
        return type(self)(tuple(coords))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


class Point(_Vector):
    """Position vector (vertex, subgradient candidate)."""

    def as_direction(self) -> "Direction":
        return Direction(self.coords)


class Direction(_Vector):
    """Probe direction; never normalized."""

    @classmethod
    def unit(cls, n: int, j: int) -> "Direction":
        coords = [Fraction(0)] * n
        coords[j] = Fraction(1)
        return cls(tuple(coords))

    def as_point(self) -> Point:
        return Point(self.coords)


# ============================================================================
# HALFSPACES / HYPERPLANES
# ============================================================================

class GeometryOutcome(str, Enum):
    """Tagged non-point results."""
    NO_INTERSECTION = "no_intersection"
    COINCIDENT = "coincident"
    UNBOUNDED = "unbounded"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class Hyperplane:
    """{v : vᵀ·normal = offset}"""
    normal: Direction
    offset: Fraction

    def __post_init__(self):
        if self.normal.is_zero():
            raise ValueError("Hiperdüzlem normali sıfır olamaz")
        object.__setattr__(self, "offset", to_scalar(self.offset))

    def contains(self, point: Point) -> bool:
        return self.normal.dot(point) == self.offset


@dataclass(frozen=True)
class Halfspace:
    """{v : vᵀ·normal ≤ offset}"""
    normal: Direction
    offset: Fraction

    def __post_init__(self):
        if self.normal.is_zero():
            raise ValueError("Yarı-uzay normali sıfır olamaz")
        object.__setattr__(self, "offset", to_scalar(self.offset))

    def contains(self, point: Point) -> bool:
        return self.normal.dot(point) <= self.offset

    def violation(self, point: Point) -> Fraction:
        """Positive when the point is cut off."""
        return self.normal.dot(point) - self.offset

    @property
    def boundary(self) -> Hyperplane:
        return Hyperplane(self.normal, self.offset)

    def __str__(self) -> str:
        return f"v·{self.normal} ≤ {self.offset}"


# ============================================================================
# POLYGON
# ============================================================================

def _require_planar(*vectors: _Vector) -> None:
    for v in vectors:
        if len(v) != 2:
            raise DimensionMismatch(2, len(v))


def cross(o: _Vector, a: _Vector, b: _Vector) -> Fraction:
    """(a − o) × (b − o); negative for a clockwise turn."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class Polygon2:
    """
    Canonical convex polygon: clockwise, lexicographically smallest vertex first.
    May be empty, a point or a segment. Edges are derived, never stored.
    """
    vertices: Tuple[Point, ...] = ()

    @classmethod
    def from_clockwise(cls, ring: Sequence[Point]) -> "Polygon2":
        """Rotate a clockwise ring into canonical position."""
        ring = tuple(ring)
        if not ring:
            return cls(())
        start = ring.index(min(ring))
        return cls(ring[start:] + ring[:start])

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def is_point(self) -> bool:
        return len(self.vertices) == 1

    @property
    def is_segment(self) -> bool:
        return len(self.vertices) == 2

    def edges(self) -> List[Tuple[Point, Point]]:
        m = len(self.vertices)
        if m < 2:
            return []
        if m == 2:
            return [(self.vertices[0], self.vertices[1])]
        return [(self.vertices[i], self.vertices[(i + 1) % m]) for i in range(m)]

    def contains(self, point: Point) -> bool:
        _require_planar(point)
        m = len(self.vertices)
        if m == 0:
            return False
        if m == 1:
            return self.vertices[0] == point
        if m == 2:
            a, b = self.vertices
            if cross(a, b, point) != 0:
                return False
            return min(a, b) <= point <= max(a, b)
        return all(cross(p, q, point) <= 0 for p, q in self.edges())


# ============================================================================
# OPERATIONS
# ============================================================================

def intersect_hyperplanes_2d(h1: Hyperplane, h2: Hyperplane) -> Union[Point, GeometryOutcome]:
    """Cramer's rule on the 2×2 system; tagged result for parallel lines."""
    _require_planar(h1.normal, h2.normal)
    (a1, b1), (a2, b2) = h1.normal.coords, h2.normal.coords
    det = a1 * b2 - b1 * a2
    if det == 0:
        # n2 = λ·n1; aynı doğru ise offset de aynı oranda
        ratio = h2.normal.dot(h1.normal) / h1.normal.dot(h1.normal)
        if h2.offset == ratio * h1.offset:
            return GeometryOutcome.COINCIDENT
        return GeometryOutcome.NO_INTERSECTION
    x = (h1.offset * b2 - h2.offset * b1) / det
    y = (a1 * h2.offset - a2 * h1.offset) / det
    return Point((x, y))


def convex_hull_2d(points: Iterable[Point]) -> Polygon2:
    """Monotone chain; keeps only strict right turns, so output is clockwise."""
    pts = sorted(set(points))
    _require_planar(*pts)
    if len(pts) <= 1:
        return Polygon2(tuple(pts))

    upper: List[Point] = []
    for p in pts:
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) >= 0:
            upper.pop()
        upper.append(p)

    lower: List[Point] = []
    for p in reversed(pts):
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) >= 0:
            lower.pop()
        lower.append(p)

    return Polygon2(tuple(upper + lower[1:-1]))


def positively_spans_2d(normals: Sequence[Direction]) -> bool:
    """True iff the origin lies strictly inside conv(normals)."""
    hull = convex_hull_2d(n.as_point() for n in normals)
    if len(hull) < 3:
        return False
    origin = Point.zeros(2)
    return all(cross(p, q, origin) < 0 for p, q in hull.edges())


def generated_constraint_set_2d(constraints: Sequence[Halfspace]) -> Union[Polygon2, GeometryOutcome]:
    """
    H(D) in the plane.

    Bounded case: every vertex of the intersection is a pairwise line
    intersection, so the feasible pairwise points span the polygon.
    """
    if not constraints:
        raise ValueError("En az bir kısıt gerekli")
    _require_planar(*(h.normal for h in constraints))
    if not positively_spans_2d([h.normal for h in constraints]):
        return GeometryOutcome.UNBOUNDED

    candidates = []
    for h1, h2 in combinations(constraints, 2):
        p = intersect_hyperplanes_2d(h1.boundary, h2.boundary)
        if isinstance(p, Point) and all(h.contains(p) for h in constraints):
            candidates.append(p)

    if not candidates:
        raise EmptyIntersection(
            "Kısıtlar tutarsız: kesişim boş (" + "; ".join(str(h) for h in constraints) + ")"
        )
    return convex_hull_2d(candidates)


def outward_probe_direction(a: Point, b: Point, c: Point) -> Direction:
    """
    Rotate (c − a) by 90° and orient it towards b.
    Postcondition dᵀa = dᵀc < dᵀb holds exactly.
    """
    _require_planar(a, b, c)
    if a == c:
        raise DegenerateTriple(f"a = c = {a}")
    v = c - a
    d = Direction((v[1], -v[0]))
    gap = d.dot(b) - d.dot(a)
    if gap == 0:
        raise DegenerateTriple(f"b={b}, a={a} ile c={c} doğrusu üzerinde")
    return d if gap > 0 else -d
