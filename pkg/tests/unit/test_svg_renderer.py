from fractions import Fraction

import pytest

from src.domain.errors import UnsupportedProblem
from src.domain.geometry import Point
from src.services.oracles import VertexListOracle
from src.services.reconstruct import VertexBudget, reconstruct_2d, reconstruct_nf1
from src.services.svg_renderer import TraceRenderer, clip_line, render_trace_svg


def trace_for(vertices, budget=None, early_stop=True):
    oracle = VertexListOracle([Point.of(*v) for v in vertices])
    report = reconstruct_2d(oracle, budget=budget, early_stop=early_stop)
    return report.to_trace_file()


def test_one_line_per_call_for_tightness_witness(tightness_fixture):
    vertices = tightness_fixture["problem"]["vertices"]
    hidden = [Point.of(*v) for v in vertices]
    for budget, expected in ((VertexBudget(3), 9), (VertexBudget.infinite(), 10)):
        svg = render_trace_svg(trace_for(vertices, budget, early_stop=False), hidden)
        assert svg.count('<line class="probe"') == expected
        assert svg.count('<text class="call-index"') == expected
        assert svg.count('<circle class="confirmed"') == 3
        assert '<polygon class="hidden"' in svg


@pytest.mark.parametrize("vertices, budget, lines", [
    ([(3, 4)], VertexBudget.infinite(), 3),
    ([(0, 0), (2, 1)], VertexBudget(2), 5),
])
def test_degenerate_sets(vertices, budget, lines):
    svg = render_trace_svg(trace_for(vertices, budget))
    assert svg.count('<line class="probe"') == lines
    assert svg.startswith("<svg") and svg.endswith("</svg>\n")


def test_output_is_deterministic(triangle):
    trace = trace_for([(0, 0), (4, 0), (1, 3)])
    assert render_trace_svg(trace, triangle) == render_trace_svg(trace, triangle)


def test_call_numbers_are_labelled():
    svg = render_trace_svg(trace_for([(0, 0), (4, 0), (1, 3)], VertexBudget(3)))
    for index in range(1, 8):
        assert f'data-call="{index}"' in svg


def test_rejects_non_planar_trace():
    report = reconstruct_nf1(VertexListOracle([Point.of(1, 2, 3)]))
    with pytest.raises(UnsupportedProblem):
        render_trace_svg(report.to_trace_file())


class TestClipLine:
    box = (Fraction(0), Fraction(10), Fraction(0), Fraction(10))

    def test_horizontal(self):
        assert clip_line((Fraction(0), Fraction(1)), Fraction(5), self.box) == (Point.of(0, 5), Point.of(10, 5))

    def test_diagonal_through_corners(self):
        assert clip_line((Fraction(1), Fraction(-1)), Fraction(0), self.box) == (Point.of(0, 0), Point.of(10, 10))

    def test_outside(self):
        assert clip_line((Fraction(1), Fraction(0)), Fraction(20), self.box) is None

    def test_corner_touch_is_kept(self):
        assert clip_line((Fraction(1), Fraction(1)), Fraction(0), self.box) == (Point.of(0, 0), Point.of(0, 0))


def test_corner_touching_call_still_gets_a_line():
    trace = trace_for([(0, 0), (4, 0), (1, 3)], VertexBudget(3))
    xmin, _, ymin, _ = TraceRenderer(trace).box
    last = trace.records[-1].model_copy(update={"direction": [Fraction(1), Fraction(1)], "value": xmin + ymin})
    trace = trace.model_copy(update={"records": trace.records[:-1] + [last]})

    svg = render_trace_svg(trace)
    assert svg.count('<line class="probe"') == len(trace.records) == 7
