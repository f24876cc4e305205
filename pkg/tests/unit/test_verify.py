import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.domain.geometry import Direction, Point
from src.domain.models import Algorithm, InitKind
from src.services.oracles import VertexListOracle
from src.services.reconstruct import ReconstructionReport, VertexBudget, reconstruct_2d
from src.services.verify import (
    audit_calls,
    audit_row_for,
    canonical_vertices_nd,
    load_bound_rules,
    sandwich_violation,
    support_equivalent,
)


def report(algorithm, n, vertices, budget, calls, **kwargs):
    return ReconstructionReport(
        vertices=vertices,
        oracle_calls=calls,
        algorithm=algorithm,
        dimension=n,
        budget=budget,
        **kwargs,
    )


TRIANGLE = [Point.of(0, 0), Point.of(1, 3), Point.of(4, 0)]


# =============================================================================
# VERTEX SETS
# =============================================================================

class TestCanonicalVertices:

    def test_midpoint_removed(self):
        pts = [Point.of(0, 0, 0), Point.of(1, 1, 1), Point.of("1/2", "1/2", "1/2")]
        assert canonical_vertices_nd(pts) == [Point.of(0, 0, 0), Point.of(1, 1, 1)]

    def test_singleton(self):
        assert canonical_vertices_nd([Point.of(1, 2)]) == [Point.of(1, 2)]

    def test_planar_interior_point(self):
        pts = [Point.of(0, 0), Point.of(4, 0), Point.of(1, 3), Point.of(1, 1)]
        assert canonical_vertices_nd(pts) == TRIANGLE

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            canonical_vertices_nd([])

    @given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=1, max_size=3))
    def test_idempotent_and_permutation_invariant(self, raw):
        pts = [Point.of(*p) for p in raw]
        canonical = canonical_vertices_nd(pts)
        assert canonical_vertices_nd(canonical) == canonical
        assert canonical_vertices_nd(list(reversed(pts))) == canonical


class TestSupportEquivalent:
    axes = [Direction.of(1, 0), Direction.of(0, 1), Direction.of(-1, 0), Direction.of(0, -1)]

    def test_identical_sets(self):
        segment = [Point.of(0, 0), Point.of(1, 0)]
        assert support_equivalent(segment, segment, self.axes)

    def test_missing_vertex_detected(self):
        assert not support_equivalent([Point.of(0, 0)], [Point.of(0, 0), Point.of(1, 0)], self.axes)

    def test_interior_points_do_not_matter(self):
        a = [Point.of(0, 0), Point.of(2, 2)]
        b = [Point.of(0, 0), Point.of(1, 1), Point.of(2, 2)]
        dirs = self.axes + [Direction.of(1, -1), Direction.of(-3, 7)]
        assert support_equivalent(a, b, dirs)
        assert support_equivalent(b, a, dirs)

    def test_requires_directions(self):
        with pytest.raises(ValueError):
            support_equivalent([Point.of(0, 0)], [Point.of(0, 0)], [])


# =============================================================================
# CALL-COUNT AUDIT
# =============================================================================

class TestAudit:

    def test_planar_budget_equal(self):
        rep = report(Algorithm.R2, 2, TRIANGLE, VertexBudget(3), 9)
        row = audit_row_for(rep)
        assert row.bound == 9
        assert row.key == "r2-equal"
        assert audit_calls(rep, row).label == "pass"

    def test_planar_unknown_budget(self):
        rep = report(Algorithm.R2, 2, TRIANGLE, VertexBudget.infinite(), 10)
        row = audit_row_for(rep)
        assert row.bound == 10
        assert audit_calls(rep, row).passed

    def test_pairing_over_bound_fails(self):
        pair = [Point.of(0, 0, 0, 0, 0), Point.of(1, 1, 1, 1, 1)]
        rep = report(Algorithm.NF2, 5, pair, VertexBudget(2), 15)
        row = audit_row_for(rep)
        result = audit_calls(rep, row)
        assert row.bound == 14
        assert not result.passed
        assert result.label == "fail"
        assert "15" in result.details

    def test_custom_init_surcharge(self):
        rep = report(Algorithm.R2, 2, TRIANGLE, VertexBudget.infinite(), 12, init=InitKind.CUSTOM, init_size=5)
        row = audit_row_for(rep)
        assert row.key == "r2-custom-greater"
        assert row.bound == 3 * 3 + 1 + 2

    def test_custom_init_budget_equal(self):
        rep = report(Algorithm.R2, 2, TRIANGLE, VertexBudget(3), 11, init=InitKind.CUSTOM, init_size=5)
        row = audit_row_for(rep)
        assert row.key == "r2-custom-equal"
        assert row.bound == 3 * 3 + 2

    @pytest.mark.parametrize("budget, key, bound", [
        (VertexBudget(3), "r2-axis-equal", 9),
        (VertexBudget.infinite(), "r2-axis-greater", 10),
    ])
    def test_axis_rectangle_rows(self, budget, key, bound):
        rep = report(Algorithm.R2, 2, TRIANGLE, budget, 9, init=InitKind.AXIS_RECTANGLE, init_size=4)
        row = audit_row_for(rep)
        assert (row.key, row.bound) == (key, bound)

    def test_axis_rectangle_singleton(self):
        rep = report(Algorithm.R2, 2, [Point.of(3, 4)], VertexBudget.infinite(), 4, init=InitKind.AXIS_RECTANGLE)
        assert audit_row_for(rep).bound == 4

    def test_pre_probed_runs_have_no_row(self):
        rep = report(Algorithm.R2, 2, TRIANGLE, VertexBudget(3), 5, init=InitKind.PRE_PROBED)
        assert audit_row_for(rep) is None

    @pytest.mark.parametrize("n, n_v, bound", [(4, 1, 7), (4, 2, 17), (4, 3, 19)])
    def test_lifting_rows(self, n, n_v, bound):
        vertices = [Point.of(*([j] * n)) for j in range(n_v)]
        rep = report(Algorithm.NF3, n, vertices, VertexBudget(3), 0)
        assert audit_row_for(rep).bound == bound


class TestSandwich:

    @staticmethod
    def trace_of(vertices, budget=VertexBudget.infinite()):
        oracle = VertexListOracle([Point.of(*v) for v in vertices])
        return reconstruct_2d(oracle, budget=budget).trace

    @pytest.mark.parametrize("vertices", [
        [(0, 0), (4, 0), (1, 3)],
        [(0, 0), (2, 1)],
        [(3, 4)],
        [(0, 0), (2, 4), (6, 1), (5, -3), (1, -1), (2, 0)],
    ])
    def test_exact_runs_stay_sandwiched(self, vertices):
        hidden = canonical_vertices_nd([Point.of(*v) for v in vertices])
        assert sandwich_violation(self.trace_of(vertices), hidden) is None

    def test_point_outside_outer_polygon(self):
        trace = self.trace_of([(0, 0), (4, 0), (1, 3)])
        first_snapshot = next(r.index for r in trace if r.outer_vertices)
        assert sandwich_violation(trace, TRIANGLE + [Point.of(10, 10)]) == first_snapshot

    def test_confirmed_vertex_outside_hidden_set(self):
        trace = self.trace_of([(0, 0), (4, 0), (1, 3)], VertexBudget(3))
        assert sandwich_violation(trace, [Point.of(0, 0)]) is not None


class TestBoundTable:

    def test_rows_loaded_in_order(self):
        keys = [rule.key for rule in load_bound_rules()]
        assert keys[0] == "r1-single"
        assert keys[-1] == "r2-custom-greater"
        assert len(keys) == len(set(keys))

    def test_custom_table_path(self, tmp_path):
        path = tmp_path / "bounds.json"
        path.write_text(json.dumps({"rows": [
            {"key": "only", "algorithm": "nf1", "budget": "any", "per_n": 2, "source": "test"},
        ]}), encoding="utf-8")
        rules = load_bound_rules(path)
        assert [r.key for r in rules] == ["only"]
        assert rules[0].per_n == 2
