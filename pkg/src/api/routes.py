"""
API Routes
FastAPI endpoint tanımları.
Single Responsibility: Her endpoint tek bir iş yapar; hesaplama servis katmanında.
"""
import logging
from dataclasses import asdict

from fastapi import APIRouter, HTTPException

from src.api.schemas import (
    BoundRowSchema,
    BoundsResponse,
    ErrorResponse,
    HealthResponse,
    ReconstructRequest,
    ReconstructResponse,
)
from src.domain.errors import BudgetExhausted, InconsistentOracle, ReconstructionError
from src.domain.models import Algorithm
from src.infrastructure.config import get_settings
from src.services.oracles import NoisyOracle
from src.services.problem_loader import build_budget, build_init, build_oracle, hidden_vertices
from src.services.reconstruct import run_reconstruction
from src.services.verify import audit_calls, audit_row_for, canonical_vertices_nd, load_bound_rules

logger = logging.getLogger(__name__)

# =============================================================================
# ROUTER INSTANCE
# =============================================================================

router = APIRouter(prefix="/api/v1", tags=["PolyProbe API"])


def _http_error(status: int, kind: str, error: Exception, call_index=None) -> HTTPException:
    body = ErrorResponse(error=kind, message=str(error), call_index=call_index)
    return HTTPException(status_code=status, detail=body.model_dump())


# =============================================================================
# RECONSTRUCT ENDPOINT
# =============================================================================

@router.post(
    "/reconstruct",
    response_model=ReconstructResponse,
    response_model_exclude_none=True,
    responses={
        409: {"model": ErrorResponse, "description": "Tutarsız oracle ya da bütçe aşımı"},
        422: {"model": ErrorResponse, "description": "Geçersiz ya da desteklenmeyen problem"}
    },
    summary="Köşe Rekonstrüksiyonu",
    description="Problemin destek fonksiyonu oracle'ını sorgulayarak gizli köşe kümesini bulur."
)
def reconstruct(request: ReconstructRequest) -> ReconstructResponse:
    """
    Reconstruct Endpoint.

    Flow:
    1. ProblemSpec → oracle (+ isteğe bağlı gürültü)
    2. Dağıtıcı (boyut, bütçe) çiftine göre algoritmayı seçer
    3. Çağrı sayısı sınır tablosuna göre denetlenir
    """
    problem = request.problem
    logger.info(f"📨 Reconstruct: kind={problem.kind}, n={problem.dimension}, bütçe={problem.budget}")

    try:
        oracle = build_oracle(problem)
        hidden = hidden_vertices(problem)
        if request.epsilon is not None:
            seed = get_settings().SEED if request.seed is None else request.seed
            oracle = NoisyOracle(oracle, request.epsilon, seed=seed)
        report = run_reconstruction(
            oracle,
            algorithm=Algorithm(problem.algorithm),
            budget=build_budget(problem),
            init=build_init(problem.init) if problem.dimension == 2 else None,
            early_stop=request.early_stop,
        )
    except InconsistentOracle as e:
        raise _http_error(409, "inconsistent-oracle", e, e.call_index)
    except BudgetExhausted as e:
        raise _http_error(409, "budget-exhausted", e)
    except (ReconstructionError, ValueError) as e:
        raise _http_error(422, "unsupported", e)

    row = audit_row_for(report, n_v=len(hidden))
    return ReconstructResponse(
        algorithm=report.algorithm,
        dimension=report.dimension,
        budget=report.budget.to_json(),
        vertices=[list(v) for v in report.vertices],
        oracle_calls=report.oracle_calls,
        bound=row.bound if row else None,
        audit=audit_calls(report, row).label if row else "n/a",
        recovered=canonical_vertices_nd(report.vertices) == hidden,
        trace=report.to_trace_file() if request.include_trace else None,
    )


# =============================================================================
# BOUNDS ENDPOINT
# =============================================================================

@router.get(
    "/bounds",
    response_model=BoundsResponse,
    summary="Çağrı Sınırı Tablosu",
    description="Denetimde kullanılan sınır tablosunun satırları (eşleşme sırasıyla)."
)
async def bounds() -> BoundsResponse:
    return BoundsResponse(rows=[BoundRowSchema(**asdict(rule)) for rule in load_bound_rules()])


# =============================================================================
# HEALTH ENDPOINT
# =============================================================================

@router.get(
    "/health",
    response_model=HealthResponse,
    summary="Sistem Sağlığı"
)
async def health_check() -> HealthResponse:
    return HealthResponse(status="ok", version=get_settings().VERSION)
