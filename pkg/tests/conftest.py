"""
Ortak fixture'lar ve hypothesis profilleri.
HYPOTHESIS_PROFILE=ci ile daha fazla örnek çalıştırılır.
"""
import json
import os
from fractions import Fraction
from pathlib import Path

import hypothesis
import pytest

from src.domain.geometry import Point
from src.services.oracles import VertexListOracle

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=1000, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))

FIXTURES = Path(__file__).parent / "fixtures"
PROBLEMS = Path(__file__).parent.parent / "data" / "problems"


def points(*coords):
    return [Point.of(*c) for c in coords]


@pytest.fixture
def triangle():
    """Örnek üçgen: (0,0), (4,0), (1,3)."""
    return points((0, 0), (4, 0), (1, 3))


@pytest.fixture
def triangle_oracle(triangle):
    return VertexListOracle(triangle)


@pytest.fixture
def tightness_fixture():
    with open(FIXTURES / "tightness_triangle.json", encoding="utf-8") as f:
        return json.load(f, parse_float=Fraction)


@pytest.fixture
def problems_dir():
    return PROBLEMS
