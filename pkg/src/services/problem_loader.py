"""
Problem Loader
ProblemSpec → oracle, başlangıç şeması, bütçe ve gizli köşe kümesi (doğruluk için).
"""
import logging
from pathlib import Path
from typing import List, Optional, Union

from pydantic import ValidationError

from src.domain.geometry import Direction, Point
from src.domain.linalg import extreme_points
from src.domain.models import CustomInit, FiniteMaxProblem, VertexProblem, problem_adapter
from src.infrastructure.storage import read_json
from src.services.oracles import AffinePiece, FiniteMaxOracle, SupportOracle, VertexListOracle
from src.services.reconstruct.dtos import InitializationScheme, VertexBudget

logger = logging.getLogger(__name__)

Problem = Union[VertexProblem, FiniteMaxProblem]


class ProblemLoadError(ValueError):
    """Problem dosyası okunamadı ya da geçersiz."""


def parse_problem(payload) -> Problem:
    return problem_adapter.validate_python(payload)


def load_problem(path: Union[str, Path]) -> Problem:
    try:
        payload = read_json(path)
    except FileNotFoundError as e:
        raise ProblemLoadError(f"Problem dosyası bulunamadı: {path}") from e
    except ValueError as e:
        raise ProblemLoadError(f"Geçersiz JSON ({path}): {e}") from e
    try:
        problem = parse_problem(payload)
    except ValidationError as e:
        raise ProblemLoadError(f"Geçersiz problem ({path}): {e}") from e
    logger.info(f"📄 Problem yüklendi: {path} (kind={problem.kind}, n={problem.dimension})")
    return problem


def dump_problem(problem: Problem) -> dict:
    return problem.model_dump(mode="json")


def build_oracle(problem: Problem) -> SupportOracle:
    if isinstance(problem, VertexProblem):
        return VertexListOracle([Point(tuple(v)) for v in problem.vertices])
    pieces = [AffinePiece(Point(tuple(p.gradient)), p.offset) for p in problem.pieces]
    return FiniteMaxOracle(pieces, Point(tuple(problem.anchor)))


def hidden_vertices(problem: Problem) -> List[Point]:
    """Doğruluk için gizli köşe kümesi (kanonik)."""
    oracle = build_oracle(problem)
    if isinstance(oracle, FiniteMaxOracle):
        return oracle.subdifferential_vertices()
    return extreme_points(list(oracle.vertices))


def build_budget(problem: Problem, override: Optional[Union[int, str]] = None) -> VertexBudget:
    return VertexBudget.parse(problem.budget if override is None else override)


def build_init(spec: Union[str, CustomInit, None]) -> Optional[InitializationScheme]:
    if spec is None or spec == "paper-triangle":
        return InitializationScheme.paper_triangle()
    if spec == "axis-rectangle":
        return InitializationScheme.axis_rectangle()
    if isinstance(spec, CustomInit):
        return InitializationScheme.custom([Direction(tuple(d)) for d in spec.custom])
    raise ProblemLoadError(f"Bilinmeyen init şeması: {spec!r}")
