"""错误基类：提供分层错误体系和结构化错误上下文。

Base error classes for liftcount.

Provides a layered error hierarchy:
- LiftCountError: Base class for all library errors
- SentenceSyntaxError: Lexical/grammatical errors in a sentence file
- ValidationError: Well-formed input that violates a sentence invariant
- TwoVariableError: Input leaving the two-variable fragment
- NormalizationError: Input not in the form a normalization step requires
- AxiomError: Algorithm incompatible with the declared axioms
- OracleCapError: Brute-force enumeration above the configured caps
- VerificationMismatch: An algorithm disagreeing with the oracle
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, ClassVar

from liftcount.errors.exit_codes import ExitCode


@dataclass
class ErrorContext:
    """Structured error context for diagnostics."""

    location: tuple[int, int] | None = None
    """(line, column) in the sentence text, both 1-based"""

    details: dict[str, Any] = field(default_factory=dict)
    """Additional details about the error"""

    source: str | None = None
    """Error source (e.g., 'syntax', 'normalize', 'oracle')"""

    hint: str | None = None
    """Actionable hint for resolving the error"""

    def __str__(self) -> str:
        parts = []
        if self.source:
            parts.append(f"[{self.source}]")
        if self.location:
            line, column = self.location
            parts.append(f"at 'line {line}, column {column}'")
        if self.hint:
            parts.append(f"(hint: {self.hint})")
        return " ".join(parts)


class LiftCountError(Exception):
    """Base class for all liftcount errors.

    Attributes:
        message: Human-readable error message
        context: Optional structured error context
    """

    exit_code: ClassVar[ExitCode] = ExitCode.PARSE

    def __init__(
        self,
        message: str,
        context: ErrorContext | None = None,
    ) -> None:
        self.message = message
        self.context = context or ErrorContext()
        super().__init__(self._format_message())

    def _format_message(self) -> str:
        """Format the full error message."""
        ctx_str = str(self.context)
        if ctx_str:
            return f"{self.message} {ctx_str}"
        return self.message

    def with_hint(self, hint: str) -> LiftCountError:
        """Add a hint to this error."""
        self.context.hint = hint
        self.args = (self._format_message(),)
        return self


class SentenceSyntaxError(LiftCountError):
    """Error while reading a sentence file.

    Raised when:
    - A token is not allowed at its position
    - A directive is unknown or malformed
    - A weight is not an exact rational
    """

    def __init__(
        self,
        message: str,
        context: ErrorContext | None = None,
        *,
        line: int | None = None,
        column: int | None = None,
    ) -> None:
        ctx = context or ErrorContext(source="syntax")
        if line is not None:
            ctx.location = (line, column or 1)
        super().__init__(message, ctx)
        self.line = line
        self.column = column


class ValidationError(LiftCountError):
    """A parsed sentence violates an invariant.

    Raised when:
    - An atom's argument count differs from its predicate's arity
    - A directive names a predicate the sentence does not know
    - A cardinality constraint targets a binary predicate
    - The formula has free variables
    """

    def __init__(
        self,
        message: str,
        context: ErrorContext | None = None,
        *,
        field: str | None = None,
        expected: Any = None,
        actual: Any = None,
    ) -> None:
        ctx = context or ErrorContext(source="validation")
        if field:
            ctx.details["field"] = field
        if expected is not None:
            ctx.details["expected"] = expected
        if actual is not None:
            ctx.details["actual"] = actual
        super().__init__(message, ctx)
        self.field = field
        self.expected = expected
        self.actual = actual


class TwoVariableError(LiftCountError):
    """The sentence uses a variable other than x and y."""

    def __init__(self, message: str, *, offending: str) -> None:
        ctx = ErrorContext(source="syntax")
        ctx.details["offending"] = offending
        super().__init__(message, ctx)
        self.offending = offending


class NormalizationError(LiftCountError):
    """A normalization step received input outside its domain."""

    def __init__(self, message: str, *, step: str | None = None) -> None:
        ctx = ErrorContext(source="normalize")
        if step:
            ctx.details["step"] = step
        super().__init__(message, ctx)
        self.step = step


class AxiomError(LiftCountError):
    """The requested algorithm cannot handle the declared axioms."""

    exit_code = ExitCode.INCOMPATIBLE

    def __init__(self, message: str, *, algorithm: str, axioms: tuple[str, ...] = ()) -> None:
        ctx = ErrorContext(source="counting")
        ctx.details["algorithm"] = algorithm
        ctx.details["axioms"] = list(axioms)
        super().__init__(message, ctx)
        self.algorithm = algorithm
        self.axioms = axioms


class OracleCapError(LiftCountError):
    """Brute-force enumeration would exceed a configured cap."""

    exit_code = ExitCode.LIMIT

    def __init__(self, message: str, *, cap: str, limit: int, requested: int) -> None:
        ctx = ErrorContext(source="oracle")
        ctx.details.update({"cap": cap, "limit": limit, "requested": requested})
        super().__init__(message, ctx)
        self.cap = cap
        self.limit = limit
        self.requested = requested


class VerificationMismatch(LiftCountError):
    """An algorithm disagreed with the brute-force oracle.

    Attributes:
        n: Domain size of the first mismatch
        expected: Oracle value
        actual: Algorithm value
        witness: Ground positive literals of one oracle model, if any
    """

    exit_code = ExitCode.MISMATCH

    def __init__(
        self,
        message: str,
        *,
        n: int,
        expected: str,
        actual: str,
        witness: list[str] | None = None,
    ) -> None:
        ctx = ErrorContext(source="verify")
        ctx.details.update({"n": n, "expected": expected, "actual": actual})
        super().__init__(message, ctx)
        self.n = n
        self.expected = expected
        self.actual = actual
        self.witness = witness or []
