"""
Exact rational numbers.

All weights, r-table entries and DP values are exact rationals. The backend is
``gmpy2.mpq`` when available and ``fractions.Fraction`` otherwise; both expose
``numerator``/``denominator`` and mix freely with Python ints.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Any, Union

from liftcount._features import HAS_GMPY2

if HAS_GMPY2:
    from gmpy2 import mpq as _backend
else:  # pragma: no cover - exercised only without gmpy2
    _backend = Fraction

Rational: Any = _backend
"""Constructor of the active exact-rational type."""

RationalLike = Union[int, Fraction, Any]

ZERO = _backend(0)
ONE = _backend(1)

# -1, 3/2, +0.25, 10 ... ; exponents, inf and nan are not rationals we accept
_RATIONAL_RE = re.compile(r"^[+-]?(\d+(/\d+)?|\d*\.\d+)$")


def to_rational(value: RationalLike) -> Any:
    """Convert an int, Fraction or backend rational to the backend type."""
    if isinstance(value, Fraction):
        return _backend(value.numerator, value.denominator)
    if isinstance(value, bool):
        raise TypeError("bool is not a weight")
    if isinstance(value, (int, _backend)):
        return _backend(value)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return _backend(int(value.numerator), int(value.denominator))
    raise TypeError(f"Cannot convert {type(value).__name__} to an exact rational")


def parse_rational(text: str) -> Any | None:
    """Parse ``-1``, ``3/2`` or ``0.5`` exactly; return None for anything else."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        return None
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        return None
    return to_rational(value)


def is_integral(value: Any) -> bool:
    """Whether an exact rational has denominator 1."""
    return int(value.denominator) == 1


def format_rational(value: Any) -> str:
    """Render integers plainly and everything else as ``p/q``."""
    value = to_rational(value)
    if is_integral(value):
        return str(int(value.numerator))
    return f"{int(value.numerator)}/{int(value.denominator)}"


def factorial(n: int) -> int:
    """Exact n! as an arbitrary-precision int."""
    return math.factorial(n)
