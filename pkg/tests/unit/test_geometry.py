"""
Exact geometry: skaler ayrıştırma, doğru kesişimi, dışbükey zarf,
pozitif germe ve kısıt kümesi.
"""
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.domain.errors import DegenerateTriple, DimensionMismatch, EmptyIntersection
from src.domain.geometry import (
    Direction,
    GeometryOutcome,
    Halfspace,
    Hyperplane,
    Point,
    Polygon2,
    convex_hull_2d,
    cross,
    format_scalar,
    generated_constraint_set_2d,
    intersect_hyperplanes_2d,
    outward_probe_direction,
    positively_spans_2d,
    to_scalar,
)

coords = st.integers(min_value=-50, max_value=50)
planar_points = st.builds(Point.of, coords, coords)


# =============================================================================
# SCALARS
# =============================================================================

class TestScalars:

    @pytest.mark.parametrize("raw, expected", [
        (3, Fraction(3)),
        ("3/2", Fraction(3, 2)),
        ("0.1", Fraction(1, 10)),
        (" -2.50 ", Fraction(-5, 2)),
        (Fraction(7, 3), Fraction(7, 3)),
    ])
    def test_exact_encodings(self, raw, expected):
        assert to_scalar(raw) == expected

    @pytest.mark.parametrize("raw", [0.1, True, "abc", "1/0", "nan/2", None])
    def test_rejects_inexact_or_malformed(self, raw):
        with pytest.raises(ValueError):
            to_scalar(raw)

    def test_format_keeps_integers_and_writes_ratios(self):
        assert format_scalar(Fraction(4)) == 4
        assert format_scalar(Fraction(-3, 6)) == "-1/2"


class TestVectors:

    def test_dimension_mismatch_is_reported(self):
        with pytest.raises(DimensionMismatch):
            Point.of(1, 2).dot(Direction.of(1, 2, 3))

    def test_padding_and_truncation(self):
        p = Point.of(1, "1/2")
        assert p.padded(4) == Point.of(1, "1/2", 0, 0)
        assert p.padded(4).truncated(2) == p

    def test_unit_direction(self):
        assert Direction.unit(3, 1) == Direction.of(0, 1, 0)

    def test_points_are_ordered_lexicographically(self):
        assert sorted([Point.of(1, 0), Point.of(0, 5), Point.of(0, -1)]) == [
            Point.of(0, -1), Point.of(0, 5), Point.of(1, 0)
        ]


# =============================================================================
# LINE INTERSECTION
# =============================================================================

class TestIntersectHyperplanes:

    def test_axis_lines(self):
        h1 = Hyperplane(Direction.of(1, 0), 4)
        h2 = Hyperplane(Direction.of(0, 1), 3)
        assert intersect_hyperplanes_2d(h1, h2) == Point.of(4, 3)

    def test_rational_result(self):
        h1 = Hyperplane(Direction.of(1, 1), 1)
        h2 = Hyperplane(Direction.of(1, -1), 0)
        assert intersect_hyperplanes_2d(h1, h2) == Point.of("1/2", "1/2")

    def test_parallel_lines(self):
        h1 = Hyperplane(Direction.of(1, 0), 0)
        h2 = Hyperplane(Direction.of(2, 0), 5)
        assert intersect_hyperplanes_2d(h1, h2) is GeometryOutcome.NO_INTERSECTION

    def test_same_line_with_scaled_normal(self):
        h1 = Hyperplane(Direction.of(1, 2), 3)
        h2 = Hyperplane(Direction.of(-2, -4), -6)
        assert intersect_hyperplanes_2d(h1, h2) is GeometryOutcome.COINCIDENT

    def test_zero_normal_rejected(self):
        with pytest.raises(ValueError):
            Hyperplane(Direction.of(0, 0), 1)


# =============================================================================
# CONVEX HULL
# =============================================================================

class TestConvexHull:

    def test_interior_point_removed_clockwise_order(self):
        hull = convex_hull_2d([Point.of(0, 0), Point.of(4, 0), Point.of(1, 3), Point.of(1, 1)])
        assert hull.vertices == (Point.of(0, 0), Point.of(1, 3), Point.of(4, 0))

    def test_collinear_points_collapse_to_segment(self):
        hull = convex_hull_2d([Point.of(0, 0), Point.of(1, 1), Point.of(2, 2)])
        assert hull.vertices == (Point.of(0, 0), Point.of(2, 2))
        assert hull.is_segment

    def test_duplicates_collapse_to_point(self):
        hull = convex_hull_2d([Point.of(3, 4)] * 3)
        assert hull.is_point

    @given(st.lists(planar_points, min_size=1, max_size=12))
    def test_hull_contains_every_input_point(self, pts):
        hull = convex_hull_2d(pts)
        assert all(hull.contains(p) for p in pts)

    @given(st.lists(planar_points, min_size=3, max_size=12))
    def test_hull_is_strictly_clockwise(self, pts):
        hull = convex_hull_2d(pts)
        m = len(hull)
        if m >= 3:
            v = hull.vertices
            assert all(cross(v[i], v[(i + 1) % m], v[(i + 2) % m]) < 0 for i in range(m))
            assert v[0] == min(v)

    @given(st.lists(planar_points, min_size=1, max_size=10))
    def test_idempotent(self, pts):
        hull = convex_hull_2d(pts)
        assert convex_hull_2d(hull.vertices) == hull


# =============================================================================
# POSITIVE SPANNING / GENERATED SET
# =============================================================================

class TestPositiveSpanning:

    @pytest.mark.parametrize("normals, expected", [
        ([(1, 0), (0, 1), (-1, -1)], True),
        ([(1, 0), (0, 1), (-1, 0), (0, -1)], True),
        ([(1, 0), (0, 1), (-1, 0)], False),
        ([(1, 0), (-1, 0)], False),
        ([(1, 1), (2, 2), (-1, -1)], False),
    ])
    def test_spanning_sets(self, normals, expected):
        assert positively_spans_2d([Direction.of(*n) for n in normals]) is expected


class TestGeneratedConstraintSet:

    def test_triangle_from_initial_probes(self):
        constraints = [
            Halfspace(Direction.of(1, 0), 4),
            Halfspace(Direction.of(0, 1), 3),
            Halfspace(Direction.of(-1, -1), 0),
        ]
        polygon = generated_constraint_set_2d(constraints)
        assert polygon == Polygon2((Point.of(-3, 3), Point.of(4, 3), Point.of(4, -4)))

    def test_unbounded_when_not_spanning(self):
        constraints = [Halfspace(Direction.of(1, 0), 1), Halfspace(Direction.of(0, 1), 1)]
        assert generated_constraint_set_2d(constraints) is GeometryOutcome.UNBOUNDED

    def test_empty_intersection_raises(self):
        constraints = [
            Halfspace(Direction.of(1, 0), -1),
            Halfspace(Direction.of(-1, 0), -1),
            Halfspace(Direction.of(0, 1), 1),
            Halfspace(Direction.of(0, -1), 1),
        ]
        with pytest.raises(EmptyIntersection):
            generated_constraint_set_2d(constraints)

    def test_point_set(self):
        constraints = [
            Halfspace(Direction.of(1, 0), 3),
            Halfspace(Direction.of(0, 1), 4),
            Halfspace(Direction.of(-1, -1), -7),
        ]
        assert generated_constraint_set_2d(constraints).vertices == (Point.of(3, 4),)


class TestOutwardProbeDirection:

    def test_orientation(self):
        a, b, c = Point.of(-3, 3), Point.of(4, 3), Point.of(4, -4)
        d = outward_probe_direction(a, b, c)
        assert d.dot(a) == d.dot(c) < d.dot(b)

    def test_degenerate_triples(self):
        with pytest.raises(DegenerateTriple):
            outward_probe_direction(Point.of(0, 0), Point.of(1, 1), Point.of(0, 0))
        with pytest.raises(DegenerateTriple):
            outward_probe_direction(Point.of(0, 0), Point.of(1, 1), Point.of(2, 2))

    @given(planar_points, planar_points, planar_points)
    def test_postcondition_holds_exactly(self, a, b, c):
        if a == c or cross(a, b, c) == 0:
            return
        d = outward_probe_direction(a, b, c)
        assert d.dot(a) == d.dot(c)
        assert d.dot(b) > d.dot(a)
