"""Tests for the brute-force oracle and sequence verification."""

from math import factorial

import pytest

from liftcount.config import LiftCountSettings
from liftcount.errors import OracleCapError, ValidationError, VerificationMismatch
from liftcount.oracle import VerificationRecord, brute_force_wfomc, verify_sequence
from liftcount.syntax import parse_sentence
from tests.conftest import load_sentence

UPWARD_CLOSED = "forall x. forall y. (L(x,y) -> (P(x) -> P(y)))\n#axiom linear_order L\n"
ALTERNATING_PATH = "forall x. forall y. (S(x,y) -> (P(x) <-> ~P(y)))\n#axiom successor S\n"


class TestBruteForce:
    """Tests for brute_force_wfomc."""

    def test_successor_chains(self, settings: LiftCountSettings) -> None:
        """Test one model per successor chain under a fixed order."""
        result = brute_force_wfomc(load_sentence("top_axioms"), 3, fixed_order=True, settings=settings)
        assert result.value == 6
        assert result.models == 6

    def test_all_orders(self, settings: LiftCountSettings) -> None:
        """Test summing over all orders multiplies by n!."""
        result = brute_force_wfomc(load_sentence("top_axioms"), 3, settings=settings)
        assert result.value == factorial(3) ** 2

    def test_worked_example(self, settings: LiftCountSettings) -> None:
        """Test the worked example at n = 2."""
        assert brute_force_wfomc(load_sentence("worked_example"), 2, settings=settings).value == 441

    def test_ordered_set_partitions(self, settings: LiftCountSettings) -> None:
        """Test ordered set partitions under fixed and full orders."""
        sentence = load_sentence("phi1")
        assert brute_force_wfomc(sentence, 2, fixed_order=True, settings=settings).value == 3
        assert brute_force_wfomc(sentence, 3, fixed_order=True, settings=settings).value == 13

    def test_linear_order_alone(self, settings: LiftCountSettings) -> None:
        """Test a sentence with only a linear order."""
        sentence = parse_sentence(UPWARD_CLOSED)
        assert brute_force_wfomc(sentence, 3, fixed_order=True, settings=settings).value == 4
        assert brute_force_wfomc(sentence, 3, settings=settings).value == 24

    def test_successor_alone_ignores_fixed_order(self, settings: LiftCountSettings) -> None:
        """Test fixed_order has no effect without a linear order."""
        sentence = parse_sentence(ALTERNATING_PATH)
        fixed = brute_force_wfomc(sentence, 3, fixed_order=True, settings=settings)
        free = brute_force_wfomc(sentence, 3, settings=settings)
        assert fixed.value == free.value == 12

    def test_cardinality(self, settings: LiftCountSettings) -> None:
        """Test cardinality constraints filter models."""
        sentence = parse_sentence("forall x. (U(x) | V(x))\n#cardinality U = 1\n")
        assert brute_force_wfomc(sentence, 3, settings=settings).value == 6

    def test_witness(self, settings: LiftCountSettings) -> None:
        """Test the witness lists the first model's positive literals."""
        result = brute_force_wfomc(parse_sentence("forall x. forall y. (R(x,y) & P(x))"), 2, settings=settings)
        assert result.models == 1
        assert result.witness == ["R(1,1)", "R(1,2)", "R(2,1)", "R(2,2)", "P(1)", "P(2)"]

    def test_unsatisfiable(self, settings: LiftCountSettings) -> None:
        """Test an unsatisfiable sentence has no witness."""
        result = brute_force_wfomc(parse_sentence("exists x. (P(x) & ~P(x))"), 3, settings=settings)
        assert result.value == 0
        assert result.models == 0
        assert result.witness is None

    def test_pooled_matches_serial(self, settings: LiftCountSettings) -> None:
        """Test pooled enumeration gives the serial count."""
        sentence = load_sentence("worked_example")
        assert brute_force_wfomc(sentence, 2, settings=settings, workers=2).value == 441

    def test_domain_cap(self) -> None:
        """Test the domain size cap."""
        settings = LiftCountSettings(oracle_max_n=2, _env_file=None)
        with pytest.raises(OracleCapError) as excinfo:
            brute_force_wfomc(load_sentence("top_axioms"), 3, settings=settings)
        assert excinfo.value.cap == "n"
        assert excinfo.value.requested == 3

    def test_free_bits_cap(self, settings: LiftCountSettings) -> None:
        """Test the free ground literal cap."""
        with pytest.raises(OracleCapError) as excinfo:
            brute_force_wfomc(load_sentence("worked_example"), 5, settings=settings)
        assert excinfo.value.cap == "free_bits"
        assert excinfo.value.requested == 30

    def test_empty_domain(self, settings: LiftCountSettings) -> None:
        """Test n = 0 is rejected."""
        with pytest.raises(ValidationError):
            brute_force_wfomc(load_sentence("top_axioms"), 0, settings=settings)


class TestVerify:
    """Tests for verify_sequence."""

    def test_records(self, settings: LiftCountSettings) -> None:
        """Test one record per size."""
        records = verify_sequence(
            load_sentence("top_axioms"), [1, 2, 3], factorial, fixed_order=True, settings=settings
        )
        assert [r.n for r in records] == [1, 2, 3]
        assert all(r.matches for r in records)
        assert records[-1].models == 6

    def test_mismatch(self, settings: LiftCountSettings) -> None:
        """Test a mismatch reports the size, values and witness."""
        with pytest.raises(VerificationMismatch) as excinfo:
            verify_sequence(load_sentence("top_axioms"), [1, 2], lambda n: 0, fixed_order=True, settings=settings)
        error = excinfo.value
        assert error.n == 1
        assert error.expected == "1"
        assert error.actual == "0"
        assert error.witness == ["L(1,1)"]

    def test_record_matches(self) -> None:
        """Test VerificationRecord.matches."""
        assert VerificationRecord(2, 3, 3, 3).matches
        assert not VerificationRecord(2, 3, 4, 3).matches
