"""
Telemetry module for liftcount.

Provides structured, context-aware logging for counting runs.
"""

from liftcount.telemetry.logger import (
    JsonFormatter,
    LiftCountLogger,
    LogContext,
    LogLevel,
    TextFormatter,
    clear_log_context,
    get_log_context,
    get_logger,
    set_log_context,
)

__all__ = [
    "JsonFormatter",
    "LiftCountLogger",
    "LogContext",
    "LogLevel",
    "TextFormatter",
    "clear_log_context",
    "get_log_context",
    "get_logger",
    "set_log_context",
]
