from functools import lru_cache
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

PROJECT_ROOT = Path(__file__).resolve().parents[2]


class Settings(BaseSettings):
    APP_NAME: str = "PolyProbe"
    VERSION: str = "1.0.0"

    # Açıkken reconstruct_2d her adımda iç tutarlılık kontrollerini çalıştırır (yavaş)
    DEBUG: bool = False
    LOG_LEVEL: str = "INFO"

    # Tekrarlanabilirlik - CLI'daki --seed yoksa bu kullanılır
    SEED: int = 42

    # Instance generator: koordinatlar [-GRID_RADIUS, GRID_RADIUS] aralığında
    GRID_RADIUS: int = Field(100, ge=1)

    # Bütçe sonsuzken düzlem algoritmasının sert çağrı sınırı
    PROBE_LIMIT: int = Field(512, ge=4)

    # NoisyOracle: ξ = ε·k/NOISE_GRID, |k| < NOISE_GRID
    NOISE_GRID: int = Field(1_000_000, ge=2)

    # Benchmark
    BENCH_COUNT: int = Field(1000, ge=1)
    BENCH_WORKERS: int = Field(1, ge=1)

    # Çağrı sınırı tablosu (veri, kod değil)
    CALL_BOUNDS_PATH: Path = PROJECT_ROOT / "data" / "call_bounds.json"

    # .env dosyasındaki ekstra değişkenleri görmezden gel
    model_config = SettingsConfigDict(
        env_file=".env",
        extra="ignore"
    )


@lru_cache()
def get_settings() -> Settings:
    return Settings()
