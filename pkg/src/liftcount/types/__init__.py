"""
Value types shared across liftcount modules.
"""

from liftcount.types.rational import (
    ONE,
    ZERO,
    Rational,
    RationalLike,
    factorial,
    format_rational,
    is_integral,
    parse_rational,
    to_rational,
)

__all__ = [
    "ONE",
    "ZERO",
    "Rational",
    "RationalLike",
    "factorial",
    "format_rational",
    "is_integral",
    "parse_rational",
    "to_rational",
]
