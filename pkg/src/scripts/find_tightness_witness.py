"""
Tightness Witness Search
Küçük tamsayı üçgenleri arasında, erken durdurma kapalıyken
bütçe = 3 ile tam 9, bütçe = ∞ ile tam 10 çağrı harcayan bir üçgen arar
ve bulduğunu test fixture'ı olarak yazar.
"""
import argparse
import logging
import random
import sys
from pathlib import Path

# Path ayarı: Proje kökünü Python path'ine ekle
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from src.domain.geometry import Point
from src.domain.linalg import extreme_points
from src.domain.models import VertexProblem
from src.infrastructure.storage import write_json
from src.services.oracles import VertexListOracle
from src.services.reconstruct import VertexBudget, reconstruct_2d

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

DEFAULT_OUT = project_root / "tests" / "fixtures" / "tightness_triangle.json"


def call_counts(vertices) -> tuple:
    oracle = VertexListOracle(vertices)
    finite = reconstruct_2d(oracle, budget=VertexBudget(3), early_stop=False).oracle_calls
    infinite = reconstruct_2d(oracle, budget=VertexBudget.infinite(), early_stop=False).oracle_calls
    return finite, infinite


def search(seed: int, attempts: int, radius: int):
    rng = random.Random(seed)
    for attempt in range(1, attempts + 1):
        triangle = [Point.of(rng.randint(0, radius), rng.randint(0, radius)) for _ in range(3)]
        if len(extreme_points(triangle)) != 3:
            continue
        if call_counts(triangle) == (9, 10):
            logger.info(f"🎯 {attempt}. denemede bulundu: {[str(p) for p in triangle]}")
            return sorted(triangle)
    return None


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--attempts", type=int, default=5000)
    parser.add_argument("--radius", type=int, default=8)
    parser.add_argument("--out", type=Path, default=DEFAULT_OUT)
    args = parser.parse_args()

    logger.info("=" * 60)
    logger.info("🔍 TIGHTNESS WITNESS ARAMASI BAŞLADI")
    logger.info("=" * 60)

    triangle = search(args.seed, args.attempts, args.radius)
    if triangle is None:
        logger.error(f"❌ {args.attempts} denemede tanık bulunamadı")
        return 1

    problem = VertexProblem(dimension=2, vertices=[list(p) for p in triangle], budget=3)
    write_json(args.out, {
        "problem": problem.model_dump(mode="json"),
        "early_stop": False,
        "expected_calls": {"3": 9, "infinity": 10},
        "search": {"seed": args.seed, "radius": args.radius},
    })
    logger.info("🎉 İşlem tamamlandı.")
    return 0


if __name__ == "__main__":
    sys.exit(main())
