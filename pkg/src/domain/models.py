"""
Domain Layer: Problem & Trace Models
Pydantic sözleşmeleri: problem dosyası (ProblemSpec) ve iz dosyası (TraceFile).
Rasyoneller int, "p/q" veya ondalık string olarak kodlanır ve kesin ayrıştırılır.
"""
from enum import Enum
from fractions import Fraction
from typing import Annotated, List, Literal, Union

from pydantic import BaseModel, Field, PlainSerializer, PlainValidator, TypeAdapter, WithJsonSchema, model_validator

from src.domain.geometry import format_scalar, to_scalar

# ============================================================================
# EXACT RATIONAL FIELD TYPE
# ============================================================================

def _parse_rational(value) -> Fraction:
    return to_scalar(value)


Rational = Annotated[
    Fraction,
    PlainValidator(_parse_rational),
    PlainSerializer(format_scalar, return_type=Union[int, str]),
    WithJsonSchema({
        "anyOf": [
            {"type": "integer"},
            {"type": "string", "description": "'p/q' or finite decimal, e.g. '3/2' or '0.25'"}
        ]
    }),
]

RationalVector = Annotated[List[Rational], Field(min_length=1)]

BudgetValue = Union[Annotated[int, Field(ge=1)], Literal["infinity"]]

# ============================================================================
# ENUMS
# ============================================================================

class Algorithm(str, Enum):
    """Rekonstrüksiyon algoritmaları."""
    AUTO = "auto"
    R1 = "r1"
    R2 = "r2"
    NF1 = "nf1"
    NF2 = "nf2"
    NF3 = "nf3"


class InitKind(str, Enum):
    """Düzlem algoritmasının başlangıç şemaları."""
    PAPER_TRIANGLE = "paper-triangle"
    AXIS_RECTANGLE = "axis-rectangle"
    CUSTOM = "custom"
    PRE_PROBED = "pre-probed"


class Branch(str, Enum):
    """Bir oracle çağrısından sonra alınan dal."""
    INIT = "init"
    BOUND = "bound"
    CONFIRM_B = "confirm-b"
    CONFIRM_AC = "confirm-ac"
    SPLIT = "split"
    ASSIGN = "assign"
    CASE_III = "case-III"

# ============================================================================
# PROBLEM SPEC
# ============================================================================

class CustomInit(BaseModel):
    """Pozitif geren özel yön kümesi (m ≥ 3)."""
    custom: List[RationalVector] = Field(..., min_length=3)


class AffinePieceSpec(BaseModel):
    """f_i(x) = gradientᵀx + offset"""
    gradient: RationalVector
    offset: Rational = Fraction(0)


class _ProblemBase(BaseModel):
    dimension: int = Field(..., ge=1, description="Uzay boyutu n")
    budget: BudgetValue = Field("infinity", description="n̄f: köşe sayısı üst sınırı")
    algorithm: Algorithm = Algorithm.AUTO
    init: Union[Literal["paper-triangle", "axis-rectangle"], CustomInit] = "paper-triangle"

    def ensure_dimensions(self, vectors: List[List[Fraction]], what: str) -> None:
        for vec in vectors:
            if len(vec) != self.dimension:
                raise ValueError(f"{what} boyutu {len(vec)}, beklenen {self.dimension}")

    @model_validator(mode="after")
    def check_init(self):
        if isinstance(self.init, CustomInit):
            for direction in self.init.custom:
                if len(direction) != 2:
                    raise ValueError("Özel başlangıç yönleri iki boyutlu olmalı")
        return self


class VertexProblem(_ProblemBase):
    """Gizli köşe kümesi doğrudan verilir."""
    kind: Literal["vertices"] = "vertices"
    vertices: List[RationalVector] = Field(..., min_length=1)

    @model_validator(mode="after")
    def check_dimensions(self):
        self.ensure_dimensions(self.vertices, "Köşe")
        return self

    class Config:
        json_schema_extra = {
            "example": {
                "kind": "vertices",
                "dimension": 2,
                "vertices": [[0, 0], [4, 0], [1, 3]],
                "budget": 3
            }
        }


class FiniteMaxProblem(_ProblemBase):
    """f = max f_i; gizli küme x̄ noktasındaki alt-diferansiyel."""
    kind: Literal["finite_max"] = "finite_max"
    anchor: RationalVector
    pieces: List[AffinePieceSpec] = Field(..., min_length=1)

    @model_validator(mode="after")
    def check_dimensions(self):
        self.ensure_dimensions([self.anchor], "Anchor")
        self.ensure_dimensions([p.gradient for p in self.pieces], "Gradyan")
        return self


ProblemSpec = Annotated[Union[VertexProblem, FiniteMaxProblem], Field(discriminator="kind")]

problem_adapter: TypeAdapter = TypeAdapter(ProblemSpec)

# ============================================================================
# TRACE FILE
# ============================================================================

class ProbeRecordModel(BaseModel):
    """Tek bir oracle çağrısının kaydı."""
    index: int = Field(..., ge=1)
    direction: RationalVector
    value: Rational
    branch: Branch
    stage: str = ""
    outer_vertices: List[RationalVector] = Field(default_factory=list)
    confirmed_vertices: List[RationalVector] = Field(default_factory=list)


class TraceFile(BaseModel):
    """ReconstructionReport'un JSON hali."""
    algorithm: Algorithm
    dimension: int = Field(..., ge=1)
    budget: BudgetValue = "infinity"
    init: InitKind = InitKind.PAPER_TRIANGLE
    oracle_calls: int = Field(..., ge=0)
    vertices: List[RationalVector]
    records: List[ProbeRecordModel] = Field(default_factory=list)
