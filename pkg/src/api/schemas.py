"""
API Schemas (Pydantic Models)
Contract-First Design: API'nin input/output sözleşmeleri.
Problem ve iz modelleri domain katmanından gelir; burada sadece zarf tanımlanır.
"""
from typing import List, Optional

from pydantic import BaseModel, Field

from src.domain.models import Algorithm, BudgetValue, ProblemSpec, Rational, RationalVector, TraceFile


# =============================================================================
# RECONSTRUCT
# =============================================================================

class ReconstructRequest(BaseModel):
    """Rekonstrüksiyon isteği: problem + isteğe bağlı gürültü ve iz."""
    problem: ProblemSpec = Field(..., description="ProblemSpec (kind: vertices | finite_max)")
    epsilon: Optional[Rational] = Field(None, description="Gürültü genliği; verilirse gürültülü oracle kullanılır")
    seed: Optional[int] = Field(None, description="Gürültü seed'i (boş=SEED ayarı)")
    early_stop: bool = Field(True, description="Düzlem algoritmasında erken durdurma")
    include_trace: bool = Field(False, description="Yanıta çağrı izini ekle")

    class Config:
        json_schema_extra = {
            "example": {
                "problem": {
                    "kind": "vertices",
                    "dimension": 2,
                    "vertices": [[0, 0], [4, 0], [1, 3]],
                    "budget": 3
                },
                "include_trace": False
            }
        }


class ReconstructResponse(BaseModel):
    """Rekonstrüksiyon sonucu."""
    algorithm: Algorithm
    dimension: int
    budget: BudgetValue
    vertices: List[RationalVector] = Field(..., description="Bulunan köşeler, sözlük sırasıyla")
    oracle_calls: int = Field(..., ge=0)
    bound: Optional[int] = Field(None, description="Sınır tablosundaki maksimum çağrı sayısı")
    audit: str = Field(..., description="pass | fail | n/a")
    recovered: bool = Field(..., description="Bulunan küme gizli küme ile aynı mı")
    trace: Optional[TraceFile] = None

    class Config:
        json_schema_extra = {
            "example": {
                "algorithm": "r2",
                "dimension": 2,
                "budget": 3,
                "vertices": [[0, 0], [1, 3], [4, 0]],
                "oracle_calls": 7,
                "bound": 9,
                "audit": "pass",
                "recovered": True
            }
        }


# =============================================================================
# BOUNDS
# =============================================================================

class BoundRowSchema(BaseModel):
    """Sınır tablosunun bir satırı: bound = per_n·n + per_nv·n_v + const."""
    key: str
    algorithm: str
    budget: str = Field(..., description="one | equal | greater | any (n̄f ile n_v ilişkisi)")
    n_v: Optional[int] = None
    init: Optional[str] = None
    per_n: int = 0
    per_nv: int = 0
    const: int = 0
    init_surcharge: bool = False
    requires_early_stop: bool = False
    source: str


class BoundsResponse(BaseModel):
    rows: List[BoundRowSchema]


# =============================================================================
# HEALTH
# =============================================================================

class HealthResponse(BaseModel):
    """Sistem sağlık kontrolü için output."""
    status: str = Field(..., description="Genel durum")
    version: str = Field(default="1.0.0", description="API versiyonu")


# =============================================================================
# ERROR (Hata Formatı)
# =============================================================================

class ErrorResponse(BaseModel):
    """Standart hata formatı."""
    error: str = Field(..., description="Hata tipi")
    message: str = Field(..., description="Hata mesajı")
    call_index: Optional[int] = Field(None, description="Tutarsızlığın görüldüğü çağrı")

    class Config:
        json_schema_extra = {
            "example": {
                "error": "inconsistent-oracle",
                "message": "Çağrı #5: D(d) = 21/5 ∉ [dᵀa, dᵀb] = [4, 6]",
                "call_index": 5
            }
        }

