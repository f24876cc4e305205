"""
Pydantic sözleşmeleri: ProblemSpec ayrıştırma ve TraceFile.
"""
from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.domain.models import (
    Algorithm,
    Branch,
    CustomInit,
    FiniteMaxProblem,
    TraceFile,
    VertexProblem,
    problem_adapter,
)
from src.services.reconstruct import VertexBudget, reconstruct_2d


class TestProblemSpec:

    def test_rational_encodings(self):
        problem = problem_adapter.validate_python({
            "kind": "vertices",
            "dimension": 2,
            "vertices": [[0, "1/3"], ["0.25", -2]],
        })
        assert isinstance(problem, VertexProblem)
        assert problem.vertices == [[0, Fraction(1, 3)], [Fraction(1, 4), -2]]
        assert problem.budget == "infinity"
        assert problem.algorithm == Algorithm.AUTO

    def test_float_rejected(self):
        with pytest.raises(ValidationError, match="Kesin olmayan"):
            problem_adapter.validate_python({"kind": "vertices", "dimension": 1, "vertices": [[0.5]]})

    def test_dimension_mismatch(self):
        with pytest.raises(ValidationError, match="beklenen 2"):
            problem_adapter.validate_python({"kind": "vertices", "dimension": 2, "vertices": [[1, 2, 3]]})

    def test_budget_must_be_positive(self):
        with pytest.raises(ValidationError):
            problem_adapter.validate_python({"kind": "vertices", "dimension": 1, "vertices": [[1]], "budget": 0})

    def test_discriminator_selects_finite_max(self):
        problem = problem_adapter.validate_python({
            "kind": "finite_max",
            "dimension": 2,
            "anchor": [0, 0],
            "pieces": [{"gradient": [1, 0]}, {"gradient": [0, 1], "offset": "1/2"}],
        })
        assert isinstance(problem, FiniteMaxProblem)
        assert problem.pieces[0].offset == 0
        assert problem.pieces[1].offset == Fraction(1, 2)

    def test_unknown_kind(self):
        with pytest.raises(ValidationError):
            problem_adapter.validate_python({"kind": "ellipse", "dimension": 2})

    def test_custom_init(self):
        problem = problem_adapter.validate_python({
            "kind": "vertices",
            "dimension": 2,
            "vertices": [[0, 0]],
            "init": {"custom": [[1, 0], [0, 1], [-1, -1]]},
        })
        assert isinstance(problem.init, CustomInit)
        assert len(problem.init.custom) == 3

    def test_custom_init_must_be_planar(self):
        with pytest.raises(ValidationError, match="iki boyutlu"):
            problem_adapter.validate_python({
                "kind": "vertices",
                "dimension": 2,
                "vertices": [[0, 0]],
                "init": {"custom": [[1, 0, 0], [0, 1, 0], [-1, -1, 0]]},
            })

    def test_dump_writes_ratios_as_strings(self):
        problem = VertexProblem(dimension=1, vertices=[["3/2"], [4]], budget=2)
        dumped = problem.model_dump(mode="json")
        assert dumped["vertices"] == [["3/2"], [4]]
        assert problem_adapter.validate_python(dumped) == problem


class TestTraceFile:

    def test_report_to_trace_file(self, triangle_oracle):
        report = reconstruct_2d(triangle_oracle, budget=VertexBudget(3))
        trace = report.to_trace_file()
        assert trace.budget == 3
        assert trace.oracle_calls == len(trace.records) == 7
        assert trace.records[0].branch == Branch.INIT

        restored = TraceFile.model_validate_json(trace.model_dump_json())
        assert restored == trace

    def test_infinite_budget_written_as_string(self, triangle_oracle):
        trace = reconstruct_2d(triangle_oracle).to_trace_file()
        assert trace.model_dump(mode="json")["budget"] == "infinity"
