"""
PolyProbe CLI
Alt komutlar: reconstruct, bench, render.

Çıkış kodları:
    0  başarılı
    1  girdi hatası (geçersiz JSON, boyut uyuşmazlığı, desteklenmeyen kombinasyon)
    2  InconsistentOracle (tutarsız / gürültülü oracle, algoritma durdu)
    3  BudgetExhausted (gizli küme bütçeden fazla köşeli)

stdout sadece JSON taşır; loglar stderr'e gider.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import ValidationError

from src.domain.errors import BudgetExhausted, InconsistentOracle, ReconstructionError
from src.domain.geometry import Point, format_scalar
from src.domain.models import Algorithm, TraceFile
from src.infrastructure.config import get_settings
from src.infrastructure.storage import read_json, write_json, write_text
from src.services.bench_service import DEFAULT_DIMENSIONS, DEFAULT_VERTEX_COUNTS, SUITES, format_table, run_bench
from src.services.oracles import NoisyOracle
from src.services.problem_loader import (
    ProblemLoadError,
    build_budget,
    build_init,
    build_oracle,
    hidden_vertices,
    load_problem,
)
from src.services.reconstruct import ReconstructionReport, run_reconstruction
from src.services.svg_renderer import render_trace_svg
from src.services.verify import audit_calls, audit_row_for, canonical_vertices_nd

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INCONSISTENT = 2
EXIT_BUDGET = 3


def _emit(payload: dict) -> None:
    print(json.dumps(payload, ensure_ascii=False, indent=2))


def _error(kind: str, message: str, code: int, **extra) -> int:
    logger.error(f"❌ {kind}: {message}")
    _emit({"error": kind, "message": message, **extra})
    return code


def _vertices_json(points) -> List[list]:
    return [[format_scalar(c) for c in p] for p in points]


def _parse_range(text: str) -> Tuple[int, int]:
    try:
        if "-" in text:
            lo, hi = text.split("-", 1)
            return int(lo), int(hi)
        return int(text), int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"Aralık 'a-b' ya da tek tamsayı olmalı: {text!r}")


# =============================================================================
# reconstruct
# =============================================================================

def _report_payload(report: ReconstructionReport, hidden: List[Point], noisy: bool) -> dict:
    row = audit_row_for(report, n_v=len(hidden))
    payload = {
        "algorithm": report.algorithm.value,
        "dimension": report.dimension,
        "budget": report.budget.to_json(),
        "vertices": _vertices_json(report.vertices),
        "oracle_calls": report.oracle_calls,
        "bound": row.bound if row else None,
        "audit": audit_calls(report, row).label if row else "n/a",
        "recovered": canonical_vertices_nd(report.vertices) == hidden,
    }
    if noisy:
        payload["noisy"] = True
    return payload


def cmd_reconstruct(args: argparse.Namespace) -> int:
    try:
        problem = load_problem(args.problem)
        if args.svg and problem.dimension != 2:
            return _error("unsupported", f"--svg sadece 2-B problemler için (n = {problem.dimension})", EXIT_INPUT)
        budget = build_budget(problem, args.budget)
        algorithm = Algorithm(args.algorithm or problem.algorithm)
        init = build_init(args.init or problem.init) if problem.dimension == 2 else None
        oracle = build_oracle(problem)
        hidden = hidden_vertices(problem)
        noisy = args.epsilon is not None
        if noisy:
            seed = get_settings().SEED if args.seed is None else args.seed
            oracle = NoisyOracle(oracle, args.epsilon, seed=seed)
            logger.info(f"🎲 Gürültülü oracle: ε = {oracle.epsilon}, seed = {seed}")
    except (ProblemLoadError, ValidationError, ValueError) as e:
        return _error("invalid-input", str(e), EXIT_INPUT)

    try:
        report = run_reconstruction(
            oracle,
            algorithm=algorithm,
            budget=budget,
            init=init,
            early_stop=not args.no_early_stop,
            check_invariants=args.check_invariants or None,
        )
    except InconsistentOracle as e:
        return _error("inconsistent-oracle", str(e), EXIT_INCONSISTENT, call_index=e.call_index)
    except BudgetExhausted as e:
        return _error("budget-exhausted", str(e), EXIT_BUDGET)
    except (ReconstructionError, ValueError) as e:
        return _error("unsupported", str(e), EXIT_INPUT)

    if args.trace:
        write_json(args.trace, report.to_trace_file().model_dump(mode="json"))
    if args.svg:
        write_text(args.svg, render_trace_svg(report.to_trace_file(), hidden))

    _emit(_report_payload(report, hidden, noisy))
    return EXIT_OK


# =============================================================================
# bench
# =============================================================================

def cmd_bench(args: argparse.Namespace) -> int:
    try:
        summary = run_bench(
            args.suite,
            count=args.count,
            seed=args.seed,
            dimension_range=args.dimension_range,
            nv_range=args.nv_range,
            workers=args.workers,
            check_invariants=args.check_invariants,
        )
    except ValueError as e:
        return _error("invalid-input", str(e), EXIT_INPUT)

    if args.out:
        write_json(args.out, summary)
    print(format_table(summary), file=sys.stderr)
    _emit(summary)
    return EXIT_OK


# =============================================================================
# render
# =============================================================================

def cmd_render(args: argparse.Namespace) -> int:
    try:
        trace = TraceFile.model_validate(read_json(args.trace))
        hidden = hidden_vertices(load_problem(args.problem)) if args.problem else None
    except FileNotFoundError as e:
        return _error("invalid-input", f"Dosya bulunamadı: {e.filename}", EXIT_INPUT)
    except (ProblemLoadError, ValidationError, ValueError) as e:
        return _error("invalid-input", str(e), EXIT_INPUT)

    try:
        svg = render_trace_svg(trace, hidden)
    except ReconstructionError as e:
        return _error("unsupported", str(e), EXIT_INPUT)

    path = write_text(args.out, svg)
    _emit({"svg": str(path), "lines": len(trace.records)})
    return EXIT_OK


# =============================================================================
# ENTRY
# =============================================================================

class UsageError(Exception):
    """Komut satırı argümanları ayrıştırılamadı."""


class JsonArgumentParser(argparse.ArgumentParser):
    """Hatalı bayrakta çıkmak yerine UsageError yükseltir; alt komutlar da bu sınıfı kullanır."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = JsonArgumentParser(prog="polyprobe", description="Destek fonksiyonu oracle'ından politop köşe rekonstrüksiyonu")
    sub = parser.add_subparsers(dest="command", required=True)

    p_rec = sub.add_parser("reconstruct", help="Problem dosyasındaki gizli köşe kümesini bul")
    p_rec.add_argument("problem", type=Path, help="ProblemSpec JSON dosyası")
    p_rec.add_argument("--budget", help="Köşe bütçesi n̄f (tamsayı ya da 'infinity'); dosyadakini ezer")
    p_rec.add_argument("--algorithm", choices=[a.value for a in Algorithm], help="Algoritma; dosyadakini ezer")
    p_rec.add_argument("--init", choices=["paper-triangle", "axis-rectangle"], help="Düzlem başlangıç şeması")
    p_rec.add_argument("--trace", type=Path, help="İz dosyasını (JSON) buraya yaz")
    p_rec.add_argument("--svg", type=Path, help="2-B iz çizimini (SVG) buraya yaz")
    p_rec.add_argument("--seed", type=int, help="Gürültü seed'i (varsayılan: SEED ayarı)")
    p_rec.add_argument("--epsilon", help="Gürültü genliği, örn. 1/100 (gürültülü oracle'ı açar)")
    p_rec.add_argument("--no-early-stop", action="store_true", help="Erken durdurmayı kapat")
    p_rec.add_argument("--check-invariants", action="store_true", help="Her adımda iç tutarlılık kontrolleri")
    p_rec.set_defaults(handler=cmd_reconstruct)

    p_bench = sub.add_parser("bench", help="Seed'li rastgele instance'larla çağrı sayısı denetimi")
    p_bench.add_argument("--suite", choices=SUITES, default="planar")
    p_bench.add_argument("--dimension-range", type=_parse_range, default=DEFAULT_DIMENSIONS, help="Rⁿ boyut aralığı, örn. 3-8")
    p_bench.add_argument("--nv-range", type=_parse_range, default=DEFAULT_VERTEX_COUNTS, help="R² köşe sayısı aralığı, örn. 1-8")
    p_bench.add_argument("--count", type=int, help="Satır başına instance sayısı (varsayılan: BENCH_COUNT)")
    p_bench.add_argument("--seed", type=int, help="Üretici seed'i (varsayılan: SEED ayarı)")
    p_bench.add_argument("--out", type=Path, help="JSON özetini buraya yaz")
    p_bench.add_argument("--workers", type=int, help="Paralel işçi süreci sayısı")
    p_bench.add_argument("--check-invariants", action="store_true", help="Her çağrıda iç tutarlılık ve gizli kümeye karşı X ⊆ P kontrolü")
    p_bench.set_defaults(handler=cmd_bench)

    p_render = sub.add_parser("render", help="2-B iz dosyasını SVG olarak çiz")
    p_render.add_argument("trace", type=Path, help="İz dosyası (JSON)")
    p_render.add_argument("--out", type=Path, required=True, help="SVG çıktı yolu")
    p_render.add_argument("--problem", type=Path, help="Gizli kümeyi de çizmek için problem dosyası")
    p_render.set_defaults(handler=cmd_render)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    settings = get_settings()
    logging.basicConfig(
        level=settings.LOG_LEVEL,
        format='%(asctime)s - %(levelname)s - %(message)s',
        stream=sys.stderr
    )
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        return _error("invalid-input", str(e), EXIT_INPUT)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
