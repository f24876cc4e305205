"""
Benchmark Service
Sınır tablosunun her satırı için seed'li instance üretir, eşleşen algoritmayı
çalıştırır, maks/ortalama çağrı sayısını ve denetim geçme oranını raporlar.

Akış:
    1. build_tasks   → tüm instance'lar ana süreçte, tek RNG ile (deterministik)
    2. run_task      → her instance bağımsız (işçi süreçlerinde çalışabilir)
    3. summarize     → instance indeksine göre birleştirilir, satır bazında özet
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from src.domain.errors import ReconstructionError
from src.domain.geometry import Point
from src.domain.models import Algorithm, CustomInit
from src.infrastructure.config import get_settings
from src.services.instance_generator import InstanceGenerator, custom_init_directions
from src.services.problem_loader import Problem, build_init, build_oracle, hidden_vertices
from src.services.reconstruct import ReconstructionReport, VertexBudget, run_reconstruction
from src.services.verify import audit_calls, audit_row_for, canonical_vertices_nd, sandwich_violation

logger = logging.getLogger(__name__)

SUITES = ("planar", "planar-custom", "planar-axis", "lifting", "degenerate", "finite-max")

DEFAULT_DIMENSIONS = (2, 8)
DEFAULT_VERTEX_COUNTS = (1, 8)


@dataclass(frozen=True)
class BenchTask:
    index: int
    suite: str
    problem: Problem
    algorithm: Algorithm
    budget: Union[int, str]
    early_stop: bool = True
    check_invariants: bool = False


@dataclass(frozen=True)
class TaskResult:
    index: int
    suite: str
    algorithm: str
    dimension: int
    n_v: int
    budget: str
    init: str
    init_size: int
    calls: int
    bound: Optional[int]
    passed: bool
    exact: bool
    error: Optional[str] = None

    @property
    def row_key(self) -> Tuple:
        return (self.suite, self.algorithm, self.dimension, self.n_v, self.budget, self.init, self.init_size)


@dataclass
class BenchRow:
    suite: str
    algorithm: str
    dimension: int
    n_v: int
    budget: str
    init: str
    init_size: int
    instances: int
    max_calls: int
    mean_calls: float
    bound: Optional[int]
    pass_rate: float
    exact_rate: float
    errors: int


# =============================================================================
# TASK GENERATION
# =============================================================================

def _planar_tasks(gen: InstanceGenerator, suite: str, count: int, nv_range: Tuple[int, int]) -> Iterable[Tuple]:
    lo, hi = nv_range
    for n_v in range(lo, hi + 1):
        for _ in range(count):
            if suite == "planar-custom":
                init: Union[str, CustomInit] = custom_init_directions(gen.rng, gen.rng.choice((4, 5, 6)))
            elif suite == "planar-axis":
                init = "axis-rectangle"
            else:
                init = "paper-triangle"
            problem = gen.polygon_problem(n_v, init=init, extra=gen.rng.randint(0, 2))
            for budget in (n_v, "infinity"):
                # n̄f = 1 dağıtıcıda koordinat yoklamasına gider; düzlem satırı değil
                if budget == 1:
                    continue
                yield problem.model_copy(update={"budget": budget}), Algorithm.R2, budget


def _lifting_tasks(gen: InstanceGenerator, count: int, dim_range: Tuple[int, int]) -> Iterable[Tuple]:
    lo, hi = dim_range
    rows = [(Algorithm.NF1, 1, 1)]
    rows += [(Algorithm.NF2, 2, n_v) for n_v in (1, 2)]
    rows += [(Algorithm.NF3, 3, n_v) for n_v in (1, 2, 3)]
    for n in range(lo, hi + 1):
        for algorithm, budget, n_v in rows:
            for i in range(count):
                # her ikinci instance küçük ızgarada: çakışan izdüşümler, sabit koordinatlar
                problem = gen.cluster_problem(n, n_v, budget=budget, algorithm=algorithm, grid=bool(i % 2))
                yield problem, algorithm, budget


def _degenerate_tasks(gen: InstanceGenerator, count: int, dim_range: Tuple[int, int]) -> Iterable[Tuple]:
    lo, hi = dim_range
    for n in range(lo, hi + 1):
        for _ in range(count):
            yield gen.cluster_problem(n, 1, budget=3, algorithm=Algorithm.NF3), Algorithm.NF3, 3


def _finite_max_tasks(gen: InstanceGenerator, count: int, dim_range: Tuple[int, int]) -> Iterable[Tuple]:
    lo, hi = dim_range
    for n in range(lo, hi + 1):
        for n_active in (1, 2, 3):
            for _ in range(count):
                budget: Union[int, str] = "infinity" if n == 2 else n_active
                problem = gen.finite_max_problem(n, n_active, n_inactive=gen.rng.randint(0, 3), budget=budget)
                yield problem, Algorithm.AUTO, budget


def build_tasks(
    suite: str,
    count: int,
    seed: Optional[int] = None,
    dimension_range: Tuple[int, int] = DEFAULT_DIMENSIONS,
    nv_range: Tuple[int, int] = DEFAULT_VERTEX_COUNTS,
    check_invariants: bool = False
) -> List[BenchTask]:
    if suite not in SUITES:
        raise ValueError(f"Bilinmeyen suite: {suite} (seçenekler: {', '.join(SUITES)})")
    if dimension_range[0] < 2 or dimension_range[0] > dimension_range[1]:
        raise ValueError(f"Geçersiz boyut aralığı: {dimension_range}")
    if nv_range[0] < 1 or nv_range[0] > nv_range[1]:
        raise ValueError(f"Geçersiz köşe aralığı: {nv_range}")

    gen = InstanceGenerator(seed=seed)
    if suite.startswith("planar"):
        source = _planar_tasks(gen, suite, count, nv_range)
    elif suite == "lifting":
        source = _lifting_tasks(gen, count, dimension_range)
    elif suite == "degenerate":
        source = _degenerate_tasks(gen, count, dimension_range)
    else:
        source = _finite_max_tasks(gen, count, dimension_range)

    tasks = [
        BenchTask(
            index=i, suite=suite, problem=problem, algorithm=algorithm, budget=budget,
            check_invariants=check_invariants,
        )
        for i, (problem, algorithm, budget) in enumerate(source)
    ]
    logger.info(f"🧪 {suite}: {len(tasks)} görev üretildi (seed={gen.seed})")
    return tasks


# =============================================================================
# EXECUTION
# =============================================================================

def _invariant_problem(report: ReconstructionReport, hidden: List[Point]) -> Optional[str]:
    """Gizli kümeyi bilen denetimler; sorun yoksa None."""
    if len(report.trace) != report.oracle_calls:
        return f"TraceMismatch: {report.oracle_calls} çağrı, izde {len(report.trace)} kayıt"
    if report.algorithm == Algorithm.R2:
        violation = sandwich_violation(report.trace, hidden)
        if violation is not None:
            return f"SandwichViolation: çağrı #{violation}"
    return None


def run_task(task: BenchTask) -> TaskResult:
    """Tek instance; işçi süreçlerine gönderilebilmesi için modül seviyesinde."""
    problem = task.problem
    hidden = hidden_vertices(problem)
    budget = VertexBudget.parse(task.budget)
    base = dict(
        index=task.index,
        suite=task.suite,
        dimension=problem.dimension,
        n_v=len(hidden),
        budget=str(budget),
    )
    try:
        init = None
        if problem.dimension == 2 and task.algorithm in (Algorithm.R2, Algorithm.AUTO):
            init = build_init(problem.init)
        report = run_reconstruction(
            build_oracle(problem),
            algorithm=task.algorithm,
            budget=budget,
            init=init,
            early_stop=task.early_stop,
            check_invariants=task.check_invariants or None,
        )
    except ReconstructionError as e:
        logger.error(f"❌ Görev #{task.index} başarısız: {e}")
        return TaskResult(
            **base, algorithm=task.algorithm.value, init="-", init_size=0,
            calls=0, bound=None, passed=False, exact=False, error=f"{type(e).__name__}: {e}"
        )

    if task.check_invariants:
        issue = _invariant_problem(report, hidden)
        if issue:
            logger.error(f"❌ Görev #{task.index}: {issue}")
            return TaskResult(
                **base, algorithm=report.algorithm.value, init="-", init_size=0,
                calls=report.oracle_calls, bound=None, passed=False, exact=False, error=issue
            )

    row = audit_row_for(report, n_v=len(hidden))
    passed = row is not None and audit_calls(report, row).passed
    return TaskResult(
        **base,
        algorithm=report.algorithm.value,
        init=report.init.value if report.algorithm == Algorithm.R2 else "-",
        init_size=report.init_size if report.algorithm == Algorithm.R2 else 0,
        calls=report.oracle_calls,
        bound=row.bound if row else None,
        passed=passed,
        exact=canonical_vertices_nd(report.vertices) == hidden,
    )


def run_tasks(tasks: Sequence[BenchTask], workers: int = 1) -> List[TaskResult]:
    if workers <= 1:
        results = [run_task(t) for t in tasks]
    else:
        chunk = max(1, len(tasks) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_task, tasks, chunksize=chunk))
    return sorted(results, key=lambda r: r.index)


def summarize(results: Sequence[TaskResult]) -> List[BenchRow]:
    groups: Dict[Tuple, List[TaskResult]] = {}
    for r in results:
        groups.setdefault(r.row_key, []).append(r)

    rows = []
    for key in sorted(groups):
        items = groups[key]
        suite, algorithm, dimension, n_v, budget, init, init_size = key
        calls = [r.calls for r in items]
        bounds = [r.bound for r in items if r.bound is not None]
        rows.append(BenchRow(
            suite=suite,
            algorithm=algorithm,
            dimension=dimension,
            n_v=n_v,
            budget=budget,
            init=init,
            init_size=init_size,
            instances=len(items),
            max_calls=max(calls),
            mean_calls=round(sum(calls) / len(calls), 3),
            bound=max(bounds) if bounds else None,
            pass_rate=round(sum(r.passed for r in items) / len(items), 4),
            exact_rate=round(sum(r.exact for r in items) / len(items), 4),
            errors=sum(r.error is not None for r in items),
        ))
    return rows


def run_bench(
    suite: str,
    count: Optional[int] = None,
    seed: Optional[int] = None,
    dimension_range: Tuple[int, int] = DEFAULT_DIMENSIONS,
    nv_range: Tuple[int, int] = DEFAULT_VERTEX_COUNTS,
    workers: Optional[int] = None,
    check_invariants: bool = False
) -> dict:
    settings = get_settings()
    count = count or settings.BENCH_COUNT
    seed = settings.SEED if seed is None else seed
    workers = workers or settings.BENCH_WORKERS

    tasks = build_tasks(
        suite, count, seed=seed, dimension_range=dimension_range, nv_range=nv_range,
        check_invariants=check_invariants,
    )
    results = run_tasks(tasks, workers=workers)
    rows = summarize(results)

    total = len(results)
    pass_rate = sum(r.passed for r in results) / total if total else 1.0
    logger.info(f"📊 {suite}: {total} çalıştırma, geçme oranı {pass_rate:.4f}")
    return {
        "suite": suite,
        "seed": seed,
        "count": count,
        "workers": workers,
        "runs": total,
        "pass_rate": round(pass_rate, 4),
        "rows": [asdict(r) for r in rows],
    }


def format_table(summary: dict) -> str:
    """Konsol için sabit genişlikli özet tablo."""
    header = f"{'alg':<4} {'n':>3} {'n_v':>4} {'bütçe':>6} {'init':<15} {'adet':>6} {'maks':>5} {'ort':>8} {'sınır':>6} {'geçme':>7}"
    lines = [header, "-" * len(header)]
    for row in summary["rows"]:
        bound = "-" if row["bound"] is None else str(row["bound"])
        lines.append(
            f"{row['algorithm']:<4} {row['dimension']:>3} {row['n_v']:>4} {row['budget']:>6} "
            f"{row['init']:<15} {row['instances']:>6} {row['max_calls']:>5} {row['mean_calls']:>8.3f} "
            f"{bound:>6} {row['pass_rate']:>7.4f}"
        )
    return "\n".join(lines)

