"""Tests for the counting engine."""

import pytest

from liftcount.config import LiftCountSettings
from liftcount.counting import Algorithm, CountingEngine, wfomc
from liftcount.errors import AxiomError
from liftcount.syntax import parse_sentence
from liftcount.telemetry import LogContext, get_log_context, set_log_context
from tests.conftest import load_sentence

ORDER_ONLY = "forall x. forall y. (L(x,y) -> (P(x) -> P(y)))\n#axiom linear_order L\n"


class TestResolve:
    """Tests for algorithm selection."""

    def test_auto(self, settings: LiftCountSettings) -> None:
        """Test auto picks fo2 without axioms and lso with both."""
        assert CountingEngine(load_sentence("worked_example"), settings).resolve() is Algorithm.FO2
        assert CountingEngine(load_sentence("phi1"), settings).resolve("auto") is Algorithm.LSO

    def test_auto_single_axiom(self, settings: LiftCountSettings) -> None:
        """Test auto refuses a single axiom and suggests the oracle."""
        engine = CountingEngine(parse_sentence(ORDER_ONLY), settings)
        with pytest.raises(AxiomError) as excinfo:
            engine.resolve()
        assert "oracle" in (excinfo.value.context.hint or "")
        assert engine.resolve(Algorithm.ORACLE) is Algorithm.ORACLE

    def test_fo2_rejects_axioms(self, settings: LiftCountSettings) -> None:
        """Test fo2 refuses axiom predicates."""
        with pytest.raises(AxiomError, match="fo2"):
            CountingEngine(load_sentence("phi2"), settings).resolve("fo2")

    def test_lso_needs_both_axioms(self, settings: LiftCountSettings) -> None:
        """Test lso needs a linear order and a successor."""
        with pytest.raises(AxiomError, match="lso"):
            CountingEngine(load_sentence("worked_example"), settings).resolve(Algorithm.LSO)

    def test_unknown_algorithm(self, settings: LiftCountSettings) -> None:
        """Test an unknown algorithm name is rejected."""
        with pytest.raises(ValueError):
            CountingEngine(load_sentence("phi1"), settings).resolve("magic")


class TestCount:
    """Tests for counting through the engine."""

    def test_count(self, settings: LiftCountSettings) -> None:
        """Test fixed-order and full counts."""
        engine = CountingEngine(load_sentence("phi1"), settings, name="phi1")
        assert engine.count(4, fixed_order=True) == 75
        assert engine.count(2) == 6

    def test_oracle(self, settings: LiftCountSettings) -> None:
        """Test counting through the oracle."""
        engine = CountingEngine(parse_sentence(ORDER_ONLY), settings)
        assert engine.count(3, Algorithm.ORACLE, fixed_order=True) == 4

    def test_algorithms_agree(self, settings: LiftCountSettings) -> None:
        """Test lso and the oracle agree."""
        engine = CountingEngine(load_sentence("phi2"), settings)
        assert engine.count(3, "lso") == engine.count(3, "oracle")

    def test_sequence(self, settings: LiftCountSettings) -> None:
        """Test counts over a range of sizes."""
        engine = CountingEngine(load_sentence("worked_example"), settings)
        assert list(engine.sequence([1, 2, 3])) == [(1, 9), (2, 441), (3, 51**3)]

    def test_reuses_tables(self, settings: LiftCountSettings) -> None:
        """Test the state space is built once."""
        engine = CountingEngine(load_sentence("phi4"), settings)
        engine.count(2)
        space = engine.state_space
        engine.count(3)
        assert engine.state_space is space

    def test_layers(self, settings: LiftCountSettings) -> None:
        """Test DP layers are exposed."""
        engine = CountingEngine(load_sentence("top_axioms"), settings)
        assert [layer.m for layer in engine.layers(3)] == [1, 2, 3]

    def test_restores_log_context(self, settings: LiftCountSettings) -> None:
        """Test the caller's log context is restored."""
        set_log_context(LogContext(sentence="outer", extra={"run": 7}))
        CountingEngine(load_sentence("top_axioms"), settings).count(2)
        assert get_log_context() == LogContext(sentence="outer", extra={"run": 7})

    def test_wfomc_from_text(self, settings: LiftCountSettings) -> None:
        """Test the one-call API on sentence text."""
        text = "forall x. forall y. (S1(x) -> R(x,y))\n#weight S1 3 1\n#weight R 2 1\n"
        assert wfomc(text, 2, settings=settings) == 441
