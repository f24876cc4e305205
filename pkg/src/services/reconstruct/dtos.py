"""
Reconstruction DTOs (Data Transfer Objects)
Algoritmalar içinde veri taşıyan yapılar.
Pydantic sözleşmelerinden (TraceFile) bağımsız; dönüşüm burada yapılır.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Set, Tuple, Union

from src.domain.geometry import Direction, Halfspace, Point, Polygon2
from src.domain.models import Algorithm, Branch, InitKind, ProbeRecordModel, TraceFile


@dataclass(frozen=True)
class VertexBudget:
    """n̄f; None = ∞."""
    bound: Optional[int] = None

    def __post_init__(self):
        if self.bound is not None and self.bound < 1:
            raise ValueError(f"Bütçe en az 1 olmalı, gelen {self.bound}")

    @classmethod
    def infinite(cls) -> "VertexBudget":
        return cls(None)

    @classmethod
    def parse(cls, value: Union[int, str, None]) -> "VertexBudget":
        if value is None or (isinstance(value, str) and value.strip().lower() in ("infinity", "inf", "∞")):
            return cls(None)
        return cls(int(value))

    @property
    def is_finite(self) -> bool:
        return self.bound is not None

    def to_json(self) -> Union[int, str]:
        return "infinity" if self.bound is None else self.bound

    def __str__(self) -> str:
        return "∞" if self.bound is None else str(self.bound)


@dataclass(frozen=True)
class InitializationScheme:
    """Düzlem algoritmasının başlangıç kısıtları."""
    kind: InitKind
    directions: Tuple[Direction, ...] = ()
    constraints: Tuple[Halfspace, ...] = ()

    @classmethod
    def paper_triangle(cls) -> "InitializationScheme":
        return cls(InitKind.PAPER_TRIANGLE, (Direction.of(1, 0), Direction.of(0, 1), Direction.of(-1, -1)))

    @classmethod
    def axis_rectangle(cls) -> "InitializationScheme":
        return cls(InitKind.AXIS_RECTANGLE, (
            Direction.of(1, 0), Direction.of(0, 1), Direction.of(-1, 0), Direction.of(0, -1)
        ))

    @classmethod
    def custom(cls, directions: Sequence[Direction]) -> "InitializationScheme":
        return cls(InitKind.CUSTOM, tuple(directions))

    @classmethod
    def pre_probed(cls, constraints: Sequence[Halfspace]) -> "InitializationScheme":
        """Bilinen kısıtlar; 0 çağrı."""
        return cls(InitKind.PRE_PROBED, constraints=tuple(constraints))

    @property
    def size(self) -> int:
        """m: başlangıç kısıtı sayısı."""
        return len(self.constraints) if self.kind == InitKind.PRE_PROBED else len(self.directions)


@dataclass
class ProbeRecord:
    """Bir çağrının izi."""
    index: int
    direction: Direction
    value: Fraction
    branch: Branch
    stage: str = ""
    outer_vertices: List[Point] = field(default_factory=list)
    confirmed_vertices: List[Point] = field(default_factory=list)

    def to_model(self) -> ProbeRecordModel:
        return ProbeRecordModel(
            index=self.index,
            direction=list(self.direction),
            value=self.value,
            branch=self.branch,
            stage=self.stage,
            outer_vertices=[list(p) for p in self.outer_vertices],
            confirmed_vertices=[list(p) for p in self.confirmed_vertices],
        )

    @classmethod
    def from_model(cls, model: ProbeRecordModel) -> "ProbeRecord":
        return cls(
            index=model.index,
            direction=Direction(tuple(model.direction)),
            value=model.value,
            branch=Branch(model.branch),
            stage=model.stage,
            outer_vertices=[Point(tuple(p)) for p in model.outer_vertices],
            confirmed_vertices=[Point(tuple(p)) for p in model.confirmed_vertices],
        )


@dataclass
class ProbeState2D:
    """
    P (dış yaklaşım, saat yönünde halka) ve S_v (doğrulanmış köşeler).
    Halka, en son yeniden demirlenen a köşesinden başlar.
    """
    outer: List[Point] = field(default_factory=list)
    confirmed: Set[Point] = field(default_factory=set)
    cursor: int = 0
    history: List[Halfspace] = field(default_factory=list)

    def polygon(self) -> Polygon2:
        return Polygon2.from_clockwise(self.outer)

    def is_complete(self) -> bool:
        return set(self.outer) == self.confirmed


@dataclass
class ReconstructionReport:
    """Algoritma çıktısı."""
    vertices: List[Point]
    oracle_calls: int
    algorithm: Algorithm
    dimension: int
    budget: VertexBudget = field(default_factory=VertexBudget.infinite)
    init: InitKind = InitKind.PAPER_TRIANGLE
    init_size: int = 0
    early_stop: bool = True
    trace: List[ProbeRecord] = field(default_factory=list)

    def to_trace_file(self) -> TraceFile:
        return TraceFile(
            algorithm=self.algorithm,
            dimension=self.dimension,
            budget=self.budget.to_json(),
            init=self.init,
            oracle_calls=self.oracle_calls,
            vertices=[list(v) for v in self.vertices],
            records=[r.to_model() for r in self.trace],
        )
