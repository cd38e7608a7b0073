# efountain/config.py
from __future__ import annotations
from dataclasses import dataclass
import logging
import os

_LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


@dataclass(frozen=True)
class Settings:
    ring: str
    second_ring: str
    max_catalan_degree: int
    max_enum_order: int
    max_inverse_degree: int
    log_level: str


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


def load_settings() -> Settings:
    # Read at call time so tests can monkeypatch the environment
    return Settings(
        ring=os.getenv("EFOUNTAIN_RING", "int"),
        second_ring=os.getenv("EFOUNTAIN_SECOND_RING", "mod2"),
        max_catalan_degree=_int_env("EFOUNTAIN_MAX_CATALAN_DEGREE", 8),
        max_enum_order=_int_env("EFOUNTAIN_MAX_ENUM_ORDER", 4),
        max_inverse_degree=_int_env("EFOUNTAIN_MAX_INVERSE_DEGREE", 4),
        log_level=os.getenv("EFOUNTAIN_LOG_LEVEL", "WARNING").upper(),
    )


def configure_logging(level: str | None = None) -> None:
    level = (level or load_settings().log_level).upper()
    root = logging.getLogger()
    if not root.handlers:
        logging.basicConfig(level=level, format=_LOG_FORMAT)
    root.setLevel(level)
