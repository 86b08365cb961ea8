"""
Runtime configuration.

Settings are read from ``LIFTCOUNT_*`` environment variables (and an optional
``.env`` file) once per process; the CLI may override individual fields.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from liftcount.telemetry import LiftCountLogger, LogLevel


class LiftCountSettings(BaseSettings):
    """Process-wide settings.

    Example:
        >>> LIFTCOUNT_THREADS=8 liftcount count phi1.fo2 --n 200
    """

    model_config = SettingsConfigDict(
        env_prefix="LIFTCOUNT_",
        env_file=".env",
        extra="ignore",
    )

    threads: int = Field(default=1, ge=1, description="Worker processes for layer and table builds")
    parallel_min_states: int = Field(
        default=2048,
        ge=1,
        description="Layers with fewer predecessor states are processed serially",
    )
    oracle_max_n: int = Field(default=6, ge=1, description="Largest domain the oracle enumerates")
    oracle_max_free_bits: int = Field(
        default=24,
        ge=1,
        description="Largest number of free ground literals the oracle enumerates",
    )
    log_level: LogLevel = Field(default=LogLevel.WARNING)
    log_format: Literal["text", "json"] = Field(default="text")

    def apply_logging(self) -> None:
        """Configure the package loggers from these settings."""
        LiftCountLogger.configure(level=self.log_level, format=self.log_format)


@lru_cache(maxsize=1)
def get_settings() -> LiftCountSettings:
    """Return the cached process settings."""
    return LiftCountSettings()


def reset_settings() -> None:
    """Drop the cached settings so the environment is read again."""
    get_settings.cache_clear()
