"""
Instance Generator
Seed'li rastgele problem üretimi (tamsayı ızgarası).

Aileler:
    polygon     R² çokgen, n_v köşe (+ zarf içi fazladan noktalar)
    cluster     Rⁿ'de n_v ≤ 3 nokta; grid=True → küçük ızgara, çakışan izdüşümler
    finite_max  rastgele affine parçalar, x̄'de aktif küme önceden yerleştirilir
"""
import logging
import math
import random
from fractions import Fraction
from typing import List, Optional, Union

from src.domain.geometry import Point
from src.domain.linalg import extreme_points
from src.domain.models import AffinePieceSpec, Algorithm, CustomInit, FiniteMaxProblem, VertexProblem
from src.infrastructure.config import get_settings

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 10_000
SMALL_GRID = (-1, 0, 1)


class InstanceGenerator:
    """Tek bir seed'den türeyen, tekrarlanabilir instance akışı."""

    def __init__(self, seed: Optional[int] = None, radius: Optional[int] = None):
        settings = get_settings()
        self.seed = settings.SEED if seed is None else seed
        self.radius = radius or settings.GRID_RADIUS
        self.rng = random.Random(self.seed)

    # ------------------------------------------------------------------
    # POINT SETS
    # ------------------------------------------------------------------

    def _grid_point(self, dimension: int, values=None) -> Point:
        if values is not None:
            return Point(tuple(Fraction(self.rng.choice(values)) for _ in range(dimension)))
        r = self.radius
        return Point(tuple(Fraction(self.rng.randint(-r, r)) for _ in range(dimension)))

    def polygon_vertices(self, n_v: int) -> List[Point]:
        """Dışbükey konumda n_v köşe; çember üzerinde yuvarlanmış tamsayı noktalar."""
        if n_v < 1:
            raise ValueError(f"n_v en az 1 olmalı, gelen {n_v}")
        if n_v <= 2:
            return self.cluster_vertices(2, n_v)

        for _ in range(MAX_ATTEMPTS):
            scale = self.rng.randint(max(2, self.radius // 2), self.radius)
            angles = sorted(self.rng.uniform(0, 2 * math.pi) for _ in range(n_v))
            points = {
                Point.of(round(scale * math.cos(t)), round(scale * math.sin(t)))
                for t in angles
            }
            hull = extreme_points(list(points))
            if len(hull) == n_v:
                return hull
        raise RuntimeError(f"{MAX_ATTEMPTS} denemede {n_v} köşeli çokgen üretilemedi")

    def cluster_vertices(self, dimension: int, n_v: int, grid: bool = False) -> List[Point]:
        """Rⁿ'de tam olarak n_v uç noktası olan küme."""
        values = SMALL_GRID if grid else None
        for _ in range(MAX_ATTEMPTS):
            points = [self._grid_point(dimension, values) for _ in range(n_v)]
            if len(extreme_points(points)) == n_v:
                return sorted(points)
        raise RuntimeError(f"{MAX_ATTEMPTS} denemede n={dimension}, n_v={n_v} kümesi üretilemedi")

    def interior_points(self, vertices: List[Point], count: int) -> List[Point]:
        """Zarfın içinden (ya da kenarından) noktalar: rastgele köşe çiftlerinin orta noktaları."""
        if len(vertices) < 2:
            return []
        extra = []
        for _ in range(count):
            p, q = self.rng.sample(vertices, 2)
            extra.append((p + q).scaled(Fraction(1, 2)))
        return extra

    # ------------------------------------------------------------------
    # PROBLEMS
    # ------------------------------------------------------------------

    def polygon_problem(
        self,
        n_v: int,
        budget: Union[int, str] = "infinity",
        init: Union[str, CustomInit] = "paper-triangle",
        extra: int = 0
    ) -> VertexProblem:
        vertices = self.polygon_vertices(n_v)
        points = vertices + self.interior_points(vertices, extra)
        return VertexProblem(
            dimension=2,
            vertices=[list(p) for p in points],
            budget=budget,
            algorithm=Algorithm.R2,
            init=init,
        )

    def cluster_problem(
        self,
        dimension: int,
        n_v: int,
        budget: Union[int, str],
        algorithm: Algorithm = Algorithm.AUTO,
        grid: bool = False
    ) -> VertexProblem:
        vertices = self.cluster_vertices(dimension, n_v, grid=grid)
        return VertexProblem(
            dimension=dimension,
            vertices=[list(p) for p in vertices],
            budget=budget,
            algorithm=algorithm,
        )

    def finite_max_problem(
        self,
        dimension: int,
        n_active: int,
        n_inactive: int = 2,
        budget: Union[int, str] = "infinity"
    ) -> FiniteMaxProblem:
        """
        Aktif gradyanlar tam n_active uç noktalı bir küme oluşturur;
        pasif parçalar x̄'de en az 1 birim aşağıda kalır.
        """
        anchor = self._grid_point(dimension)
        gradients = self.cluster_vertices(dimension, n_active)
        top = Fraction(self.rng.randint(-self.radius, self.radius))

        pieces = [
            AffinePieceSpec(gradient=list(g), offset=top - g.dot(anchor))
            for g in gradients
        ]
        for _ in range(n_inactive):
            g = self._grid_point(dimension)
            gap = self.rng.randint(1, self.radius)
            pieces.append(AffinePieceSpec(gradient=list(g), offset=top - g.dot(anchor) - gap))
        self.rng.shuffle(pieces)

        return FiniteMaxProblem(
            dimension=dimension,
            anchor=list(anchor),
            pieces=pieces,
            budget=budget,
        )


def custom_init_directions(rng: random.Random, m: int) -> CustomInit:
    """
    Pozitif geren m ≥ 3 tamsayı yön: çember üzerinde eşit aralıklı açılar,
    küçük bir rastgele dönme ile. Ardışık açı farkı < π olduğundan gerer.
    """
    if m < 3:
        raise ValueError(f"m en az 3 olmalı, gelen {m}")
    offset = rng.uniform(0, 2 * math.pi / m)
    directions = []
    for i in range(m):
        t = offset + 2 * math.pi * i / m
        directions.append([round(12 * math.cos(t)), round(12 * math.sin(t))])
    return CustomInit(custom=directions)
