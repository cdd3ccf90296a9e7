import os
from dotenv import load_dotenv
from dataclasses import dataclass
from typing import Optional

# Load environment variables from .env file
load_dotenv()


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    return int(raw) if raw not in (None, "") else default


@dataclass
class DatabaseConfig:
    url: str

    def get_url(self) -> str:
        return self.url


@dataclass
class EnumerationConfig:
    weight_ceiling: int
    workers: int
    keep_level_limit: int


@dataclass
class SearchDefaults:
    seed: Optional[int]
    exhaustive_limit: int
    samples: int


@dataclass
class GrayConfig:
    layout: str


@dataclass
class LogConfig:
    level: str


@dataclass
class Config:
    db: DatabaseConfig
    enumeration: EnumerationConfig
    search: SearchDefaults
    gray: GrayConfig
    log: LogConfig


def load_config() -> Config:
    seed = os.getenv("CODES_SEED")
    return Config(
        db=DatabaseConfig(
            url=os.getenv("CODES_DB_URL") or os.getenv("DATABASE_URL") or "sqlite+aiosqlite:///./codes.db",
        ),
        enumeration=EnumerationConfig(
            weight_ceiling=_int_env("CODES_WEIGHT_CEILING", 16),
            workers=_int_env("CODES_WORKERS", 1),
            keep_level_limit=_int_env("CODES_KEEP_LEVEL_LIMIT", 40_000_000),
        ),
        search=SearchDefaults(
            seed=int(seed) if seed else None,
            exhaustive_limit=_int_env("CODES_EXHAUSTIVE_LIMIT", 1 << 20),
            samples=_int_env("CODES_SAMPLES", 10_000),
        ),
        gray=GrayConfig(
            layout=os.getenv("CODES_GRAY_LAYOUT", "block").lower(),
        ),
        log=LogConfig(
            level=os.getenv("CODES_LOG_LEVEL", "INFO").upper(),
        ),
    )


config = load_config()
