"""
Configuration Settings Module

Centralized configuration management using Pydantic Settings.
Defaults for simulation runs, output locations and numerical tolerances
are read from FADS_* environment variables (or a local .env file).
"""

from functools import lru_cache
from typing import Literal, Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables.

    Settings are grouped by functionality for easier management.
    """

    model_config = SettingsConfigDict(
        env_prefix="FADS_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # =========================================================================
    # Application Settings
    # =========================================================================
    app_name: str = Field(default="social-fads", description="Application name")
    log_level: str = Field(default="INFO", description="Logging level")
    log_format: Literal["console", "json"] = Field(
        default="console",
        description="structlog renderer",
    )

    # =========================================================================
    # Simulation Defaults
    # =========================================================================
    default_alpha: float = Field(default=0.8, description="Signal precision")
    default_epsilon: float = Field(default=0.05, description="State-switch probability")
    default_horizon: int = Field(default=100_000, description="Periods per run")
    max_horizon: int = Field(default=10_000_000, description="Largest accepted horizon")

    # =========================================================================
    # Output & Workers
    # =========================================================================
    output_dir: str = Field(default="output", description="Default directory for result files")
    sweep_workers: int = Field(default=4, ge=1, description="Worker pool size for sweeps")

    # =========================================================================
    # Oracle
    # =========================================================================
    oracle_depth: Optional[int] = Field(
        default=None,
        description="Enumeration depth override (default: 10 * (floor(K) + 2))",
    )
    post_switch_horizon: int = Field(
        default=12,
        description="Periods from l=0 scanned for post-switch starting values",
    )
    low_confidence_mass: float = Field(
        default=0.5,
        description="Unresolved mass above which an interval is flagged",
    )

    # =========================================================================
    # Numerics
    # =========================================================================
    boundary_margin: float = Field(
        default=1e-9,
        description="Distance from the open parameter bounds that is rejected",
    )
    tolerance: float = Field(default=1e-12, description="Absolute tolerance in log-odds units")

    @field_validator("log_level", mode="before")
    @classmethod
    def normalize_log_level(cls, v):
        if isinstance(v, str):
            return v.upper()
        return v


@lru_cache()
def get_settings() -> Settings:
    """
    Get cached settings instance.

    Uses lru_cache to ensure settings are only loaded once.
    """
    return Settings()


# Convenience export
settings = get_settings()
