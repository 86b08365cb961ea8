"""错误体系：提供结构化错误类型与命令行退出码。

Error hierarchy for liftcount.
"""

from liftcount.errors.base import (
    AxiomError,
    ErrorContext,
    LiftCountError,
    NormalizationError,
    OracleCapError,
    SentenceSyntaxError,
    TwoVariableError,
    ValidationError,
    VerificationMismatch,
)
from liftcount.errors.exit_codes import ExitCode, from_name

__all__ = [
    "AxiomError",
    "ErrorContext",
    "ExitCode",
    "LiftCountError",
    "NormalizationError",
    "OracleCapError",
    "SentenceSyntaxError",
    "TwoVariableError",
    "ValidationError",
    "VerificationMismatch",
    "from_name",
]
