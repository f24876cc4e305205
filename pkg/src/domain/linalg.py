"""
Domain Layer: Exact Linear Algebra
Dense Gaussian elimination over the rationals and exact extreme-point filtering.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import List, Sequence, Tuple, Union

from src.domain.errors import DimensionMismatch
from src.domain.geometry import Direction, GeometryOutcome, Point, ScalarLike, convex_hull_2d, to_scalar


@dataclass(frozen=True)
class LinearSolution:
    """Particular solution (free variables at zero) plus a null-space basis."""
    point: Point
    null_basis: Tuple[Direction, ...] = field(default_factory=tuple)

    @property
    def is_unique(self) -> bool:
        return not self.null_basis


def solve_linear(
    matrix: Sequence[Sequence[ScalarLike]],
    rhs: Sequence[ScalarLike],
) -> Union[LinearSolution, GeometryOutcome]:
    """Reduced row echelon form; INFEASIBLE when rank(A) < rank([A|rhs])."""
    if not matrix or len(matrix) != len(rhs):
        raise ValueError("Matris ve sağ taraf aynı sayıda satır içermeli (r ≥ 1)")
    n = len(matrix[0])
    if n == 0:
        raise ValueError("Matris en az bir sütun içermeli")
    for row in matrix:
        if len(row) != n:
            raise DimensionMismatch(n, len(row))

    rows: List[List[Fraction]] = [
        [to_scalar(x) for x in row] + [to_scalar(b)] for row, b in zip(matrix, rhs)
    ]
    r = len(rows)
    pivot_cols: List[int] = []
    lead = 0
    for col in range(n):
        if lead == r:
            break
        pivot = next((i for i in range(lead, r) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[lead], rows[pivot] = rows[pivot], rows[lead]
        inv = 1 / rows[lead][col]
        rows[lead] = [x * inv for x in rows[lead]]
        for i in range(r):
            if i != lead and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[lead])]
        pivot_cols.append(col)
        lead += 1

    # sıfır satırda sıfırdan farklı sağ taraf → çelişki
    if any(rows[i][n] != 0 for i in range(lead, r)):
        return GeometryOutcome.INFEASIBLE

    particular = [Fraction(0)] * n
    for i, col in enumerate(pivot_cols):
        particular[col] = rows[i][n]

    basis = []
    for free in (c for c in range(n) if c not in pivot_cols):
        z = [Fraction(0)] * n
        z[free] = Fraction(1)
        for i, col in enumerate(pivot_cols):
            z[col] = -rows[i][free]
        basis.append(Direction(tuple(z)))

    return LinearSolution(point=Point(tuple(particular)), null_basis=tuple(basis))


def in_convex_hull(point: Point, others: Sequence[Point]) -> bool:
    """
    Exact membership test. By Carathéodory it suffices to try affinely
    independent subsets of at most n + 1 points.
    """
    n = len(point)
    for size in range(1, min(len(others), n + 1) + 1):
        for combo in combinations(others, size):
            matrix = [[q[i] for q in combo] for i in range(n)] + [[1] * size]
            sol = solve_linear(matrix, list(point) + [1])
            if isinstance(sol, GeometryOutcome) or not sol.is_unique:
                continue
            if all(w >= 0 for w in sol.point):
                return True
    return False


def extreme_points(points: Sequence[Point]) -> List[Point]:
    """Extreme points of conv(points), lexicographically ordered."""
    unique = sorted(set(points))
    if not unique:
        return []
    dim = len(unique[0])
    for p in unique:
        if len(p) != dim:
            raise DimensionMismatch(dim, len(p))
    if len(unique) <= 2:
        return unique
    if dim == 2:
        return sorted(convex_hull_2d(unique).vertices)
    return [p for p in unique if not in_convex_hull(p, [q for q in unique if q != p])]
