"""
Application settings loaded from environment variables.
Uses pydantic-settings for type-safe configuration management.
"""

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Conversion defaults and numeric thresholds, overridable via NETCONV_* variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="NETCONV_",
        case_sensitive=False,
        extra="ignore",
    )

    # Normalization defaults
    default_z0: float = Field(50.0, gt=0)
    default_convention: Literal["kurokawa", "traveling"] = "kurokawa"

    # Singularity and fit thresholds
    singular_rcond: float = Field(1e-13, gt=0)
    rank_rcond: float = Field(1e-10, gt=0)
    fit_residual_limit: float = Field(1e-6, gt=0)

    # Self-verification
    oracle_tolerance: float = Field(1e-9, gt=0)
    trial_rcond: float = Field(1e-6, gt=0)
    selftest_trials: int = Field(100, gt=0)
    selftest_seed: int = 0

    # Output
    touchstone_format: Literal["RI", "MA", "DB"] = "RI"
    log_level: str = "WARNING"


@lru_cache
def get_settings() -> Settings:
    """
    Get cached settings instance.
    Uses lru_cache for singleton-like behavior.
    """
    return Settings()


# Convenience export
settings = get_settings()
