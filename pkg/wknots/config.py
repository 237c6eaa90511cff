from __future__ import annotations

import logging
import os
from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger("wknots.config")

PACKAGE_DIR = Path(__file__).resolve().parent
DEFAULT_CORPUS_DIR = PACKAGE_DIR / "corpus"

# Env var naming an optional key=value config file.
CONFIG_ENV_VAR = "WKNOTS_CONFIG"

RANK_MODES = ("modular", "exact")
OUTPUT_FORMATS = ("text", "json")


class Settings(BaseSettings):
    # --------------------------------------------------
    # Enumeration caps (resource guards)
    # --------------------------------------------------
    # Env: WKNOTS_MAX_DEGREE_V_LINE
    max_degree_v_line: int = 5

    # Env: WKNOTS_MAX_DEGREE_W_LINE
    max_degree_w_line: int = 6

    # Env: WKNOTS_MAX_DEGREE_CIRCLE
    max_degree_circle: int = 5

    # Env: WKNOTS_MAX_DEGREE_STRANDS
    max_degree_strands: int = 5

    # Env: WKNOTS_MAX_KNOT_DEGREE
    max_knot_degree: int = 6

    # Env: WKNOTS_MAX_BRAID_DEGREE
    max_braid_degree: int = 8

    # Env: WKNOTS_MAX_KV_DEGREE
    max_kv_degree: int = 6

    # --------------------------------------------------
    # Default truncations
    # --------------------------------------------------
    # Env: WKNOTS_DEFAULT_KNOT_DEGREE
    default_knot_degree: int = 4

    # Env: WKNOTS_DEFAULT_BRAID_DEGREE
    default_braid_degree: int = 6

    # Env: WKNOTS_DEFAULT_KV_DEGREE
    default_kv_degree: int = 4

    # --------------------------------------------------
    # Rank computation
    # --------------------------------------------------
    # "modular" = two random primes must agree; "exact" = fraction-free over Z
    # Env: WKNOTS_RANK_MODE
    rank_mode: str = "modular"

    # Env: WKNOTS_MODULAR_RETRIES
    modular_retries: int = 3

    # Primes are drawn from [2^(bits-1), 2^bits)
    # Env: WKNOTS_MODULAR_PRIME_BITS
    modular_prime_bits: int = 31

    # --------------------------------------------------
    # Output + corpus
    # --------------------------------------------------
    # Env: WKNOTS_OUTPUT_FORMAT
    output_format: str = "text"

    # Env: WKNOTS_CORPUS_DIR
    corpus_dir: Path = DEFAULT_CORPUS_DIR

    # Env: WKNOTS_LOG_LEVEL
    log_level: str = "INFO"

    # --------------------------------------------------
    # Pydantic settings config
    # --------------------------------------------------
    model_config = SettingsConfigDict(
        env_prefix="WKNOTS_",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    @field_validator(
        "max_degree_v_line",
        "max_degree_w_line",
        "max_degree_circle",
        "max_degree_strands",
        "max_knot_degree",
        "max_braid_degree",
        "max_kv_degree",
        "modular_retries",
        mode="before",
    )
    @classmethod
    def validate_positive(cls, v):
        val = int(v)
        if val <= 0:
            raise ValueError("caps and retry counts must be > 0")
        return val

    @field_validator("modular_prime_bits", mode="before")
    @classmethod
    def validate_prime_bits(cls, v):
        val = int(v)
        if val < 31:
            # certified mode promises primes above 2^30
            raise ValueError("WKNOTS_MODULAR_PRIME_BITS must be >= 31")
        return val

    @field_validator("rank_mode", mode="before")
    @classmethod
    def validate_rank_mode(cls, v):
        val = str(v).strip().lower()
        if val not in RANK_MODES:
            raise ValueError(f"WKNOTS_RANK_MODE must be one of {RANK_MODES}")
        return val

    @field_validator("output_format", mode="before")
    @classmethod
    def validate_output_format(cls, v):
        val = str(v).strip().lower()
        if val not in OUTPUT_FORMATS:
            raise ValueError(f"WKNOTS_OUTPUT_FORMAT must be one of {OUTPUT_FORMATS}")
        return val

    # --------------------------------------------------
    # Convenience properties
    # --------------------------------------------------
    def line_cap(self, space: str) -> int:
        """Enumeration cap for LongLine diagrams of the given space kind."""
        if space.endswith("w"):
            return self.max_degree_w_line
        return self.max_degree_v_line

    def __init__(self, **values):
        super().__init__(**values)
        logger.debug(
            "Settings loaded (rank_mode=%s, output_format=%s, corpus_dir=%s)",
            self.rank_mode,
            self.output_format,
            self.corpus_dir,
        )


def load_settings(config_file: Optional[str] = None, **overrides) -> Settings:
    """
    Build Settings from (lowest to highest precedence) defaults, an optional
    key=value config file, the environment and explicit overrides.
    """
    path = config_file or os.environ.get(CONFIG_ENV_VAR)
    if path:
        if not Path(path).is_file():
            logger.warning("Config file %s not found; using environment only", path)
            path = None
        else:
            logger.info("Reading config file %s", path)
    values = {k: v for k, v in overrides.items() if v is not None}
    return Settings(_env_file=path, **values)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return load_settings()


settings = get_settings()


def configure(config_file: Optional[str] = None, **overrides) -> Settings:
    """Reload into the shared settings object, which modules hold by reference."""
    fresh = load_settings(config_file, **overrides)
    for name in Settings.model_fields:
        setattr(settings, name, getattr(fresh, name))
    return settings
