"""Tests for exact rational helpers."""

from fractions import Fraction

import pytest

from liftcount.types import (
    ONE,
    ZERO,
    Rational,
    factorial,
    format_rational,
    is_integral,
    parse_rational,
    to_rational,
)


class TestParseRational:
    """Tests for parse_rational."""

    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("-1", Fraction(-1)),
            ("3/2", Fraction(3, 2)),
            ("0.25", Fraction(1, 4)),
            ("+10", Fraction(10)),
            (".5", Fraction(1, 2)),
            (" 7 ", Fraction(7)),
        ],
    )
    def test_accepts_exact_forms(self, text: str, expected: Fraction) -> None:
        """Test integers, fractions and finite decimals parse exactly."""
        assert parse_rational(text) == to_rational(expected)

    @pytest.mark.parametrize("text", ["sqrt(2)", "1e-3", "inf", "nan", "1/0", "", "1/2/3", "0x10"])
    def test_rejects_other_forms(self, text: str) -> None:
        """Test inexact weight forms are rejected."""
        assert parse_rational(text) is None


class TestConversions:
    """Tests for to_rational and formatting."""

    def test_constants(self) -> None:
        """Test ZERO and ONE."""
        assert ZERO == 0
        assert ONE == 1

    def test_from_fraction(self) -> None:
        """Test conversion from Fraction normalizes sign and terms."""
        value = to_rational(Fraction(-6, 4))
        assert value == Rational(-3, 2)

    def test_rejects_bool_and_float(self) -> None:
        """Test bools and floats are not converted."""
        with pytest.raises(TypeError):
            to_rational(True)
        with pytest.raises(TypeError):
            to_rational(0.5)

    def test_format_integer(self) -> None:
        """Test integral values print without a denominator."""
        assert format_rational(Rational(441)) == "441"
        assert format_rational(Rational(-4, 2)) == "-2"

    def test_format_fraction(self) -> None:
        """Test fractions print in lowest terms."""
        assert format_rational(Rational(3, 6)) == "1/2"
        assert format_rational(Fraction(-7, 3)) == "-7/3"

    def test_is_integral(self) -> None:
        """Test is_integral."""
        assert is_integral(Rational(10, 5))
        assert not is_integral(Rational(1, 3))

    def test_factorial_is_exact(self) -> None:
        """Test factorial returns exact integers."""
        assert factorial(0) == 1
        assert factorial(25) == 15511210043330985984000000
