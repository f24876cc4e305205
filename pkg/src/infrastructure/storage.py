"""
JSON Storage
Problem, iz ve özet dosyalarını okuma/yazma.
Ondalık JSON sayıları float'a değil doğrudan Fraction'a çevrilir.
"""
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Union

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def loads_exact(text: str) -> Any:
    """json.loads; ondalık sayılar kesin rasyonel olarak ayrıştırılır."""
    return json.loads(text, parse_float=Fraction)


def read_json(path: PathLike) -> Any:
    with open(path, "r", encoding="utf-8") as f:
        return loads_exact(f.read())


def write_json(path: PathLike, payload: Any) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(payload, f, ensure_ascii=False, indent=2)
        f.write("\n")
    logger.info(f"💾 Kaydedildi: {path}")
    return path


def write_text(path: PathLike, text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    # newline="" → platformdan bağımsız, bayt bayt aynı çıktı
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    logger.info(f"💾 Kaydedildi: {path}")
    return path
