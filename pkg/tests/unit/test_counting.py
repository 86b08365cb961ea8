"""Tests for count vectors, cardinality filters and the fo2 closed form."""

import pytest

from liftcount.cells import CellTable, OneType
from liftcount.counting import (
    apply_cardinality_filter,
    compositions,
    count_vector_weight,
    multinomial,
    predicate_count,
    wfomc_fo2,
)
from liftcount.errors import AxiomError, ValidationError
from liftcount.normalize import normalize
from liftcount.syntax import Atom, CardinalityConstraint, Comparator, parse_sentence
from liftcount.types import Rational
from tests.conftest import load_sentence


class TestCompositions:
    """Tests for compositions and multinomial."""

    def test_colex_order(self) -> None:
        """Test compositions come in colex order."""
        assert list(compositions(2, 3)) == [
            (2, 0, 0),
            (1, 1, 0),
            (0, 2, 0),
            (1, 0, 1),
            (0, 1, 1),
            (0, 0, 2),
        ]

    @pytest.mark.parametrize(("n", "parts", "expected"), [(5, 3, 21), (4, 1, 1), (0, 4, 1), (3, 0, 0), (0, 0, 1)])
    def test_counts(self, n: int, parts: int, expected: int) -> None:
        """Test the number of compositions is C(n+p-1, p-1)."""
        vectors = list(compositions(n, parts))
        assert len(vectors) == expected
        assert all(sum(v) == n and len(v) == parts for v in vectors)

    def test_multinomial(self) -> None:
        """Test a multinomial coefficient."""
        assert multinomial(4, (2, 1, 1)) == 12
        assert multinomial(5, (5,)) == 1
        assert multinomial(0, ()) == 1

    def test_multinomials_sum_to_power(self) -> None:
        """Test multinomials over all compositions sum to p^n."""
        assert sum(multinomial(6, k) for k in compositions(6, 3)) == 3**6

    def test_multinomial_rejects_bad_parts(self) -> None:
        """Test parts not summing to n are rejected."""
        with pytest.raises(ValueError, match="do not sum"):
            multinomial(3, (1, 1))


class TestCardinality:
    """Tests for cardinality filtering of count vectors."""

    @pytest.fixture
    def cells(self) -> list[OneType]:
        slots = (Atom("U", ("x",)), Atom("V", ("x",)))
        return [
            OneType(0, (False, True), slots),
            OneType(1, (True, False), slots),
            OneType(2, (True, True), slots),
        ]

    def test_predicate_count(self, cells: list[OneType]) -> None:
        """Test counting elements that satisfy a predicate."""
        assert predicate_count((3, 1, 2), "U", cells) == 3
        assert predicate_count((3, 1, 2), "V", cells) == 5

    def test_filter(self, cells: list[OneType]) -> None:
        """Test count vectors against cardinality constraints."""
        constraints = (
            CardinalityConstraint("U", Comparator.LE, 2),
            CardinalityConstraint("V", Comparator.GE, 1),
        )
        assert apply_cardinality_filter((1, 1, 1), constraints, cells)
        assert not apply_cardinality_filter((0, 2, 1), constraints, cells)
        assert not apply_cardinality_filter((0, 2, 0), constraints, cells)
        assert apply_cardinality_filter((0, 9, 9), (), cells)


class TestFo2:
    """Tests for the axiom-free closed form."""

    @pytest.mark.parametrize("n", range(1, 7))
    def test_worked_example(self, n: int) -> None:
        """Test the closed form (3 * 2^n + 3^n)^n."""
        universal = normalize(load_sentence("worked_example"))
        assert wfomc_fo2(universal, n) == (3 * 2**n + 3**n) ** n

    def test_count_vector_weight(self) -> None:
        """Test the weight of single count vectors."""
        cells = CellTable(normalize(load_sentence("worked_example")))
        # two elements of the S1 1-type: weight 6^2 and one pair r = 4
        assert count_vector_weight(cells, (0, 0, 2)) == 144
        assert count_vector_weight(cells, (1, 0, 1)) == 1 * 6 * 6

    def test_existential(self) -> None:
        """Test every element needs an R-successor: rows of the matrix are non-empty."""
        universal = normalize(parse_sentence("forall x. exists y. R(x,y)"))
        assert [wfomc_fo2(universal, n) for n in (1, 2, 3)] == [1, 9, 343]

    def test_cardinality_constraint(self) -> None:
        """Test an exact cardinality constraint."""
        universal = normalize(parse_sentence("forall x. (U(x) | V(x))\n#cardinality U = 1\n"))
        assert wfomc_fo2(universal, 3) == 6

    def test_weights(self) -> None:
        """Test rational weights."""
        universal = normalize(parse_sentence("forall x. (U(x) -> V(x))\n#weight U 2 1\n#weight V 1/2 1\n"))
        # per element: ~U~V 1, ~UV 1/2, UV 1
        assert wfomc_fo2(universal, 2) == Rational(25, 4)

    def test_free_unary(self) -> None:
        """Test an unconstrained unary predicate gives 2^n."""
        assert wfomc_fo2(normalize(parse_sentence("forall x. (U(x) | ~U(x))")), 5) == 32

    def test_unreachable_cardinality(self) -> None:
        """Test an unsatisfiable cardinality bound gives zero."""
        universal = normalize(parse_sentence("forall x. (U(x) | V(x))\n#cardinality U >= 4\n"))
        assert wfomc_fo2(universal, 3) == 0

    def test_unsatisfiable(self) -> None:
        """Test a sentence without valid 1-types gives zero."""
        universal = normalize(parse_sentence("forall x. (P(x) & ~P(x))"))
        assert wfomc_fo2(universal, 3) == 0

    def test_rejects_axioms(self) -> None:
        """Test axiom predicates are rejected."""
        with pytest.raises(AxiomError, match="fo2"):
            wfomc_fo2(normalize(load_sentence("phi2")), 2)

    def test_rejects_empty_domain(self) -> None:
        """Test n = 0 is rejected."""
        with pytest.raises(ValidationError):
            wfomc_fo2(normalize(load_sentence("worked_example")), 0)

    def test_pooled_matches_serial(self) -> None:
        """Test worker-built tables give the serial count."""
        universal = normalize(load_sentence("worked_example"))
        assert wfomc_fo2(universal, 4, workers=2) == wfomc_fo2(universal, 4)

    @pytest.mark.parametrize(
        "text",
        [
            "forall x. forall y. (S1(x) -> R(x,y))\n#weight S1 3 1\n#weight R 2 1\n",
            "forall x. (U(x) | V(x))\n#cardinality U = 1\n",
            "forall x. exists y. (R(x,y) & ~P(y))\n#weight R 2 -1\n#weight P 1/2 3\n",
        ],
    )
    def test_one_type_order_does_not_matter(self, text: str) -> None:
        """Test permuting the 1-types together with their weights and r-table keeps the count."""
        universal = normalize(parse_sentence(text))
        cells = CellTable(universal)
        r = cells.plain_table()
        expected = [wfomc_fo2(universal, n, cells=cells) for n in (1, 2, 3)]
        order = list(reversed(range(cells.u)))
        assert order != sorted(order)
        permuted = CellTable(universal)
        permuted.one_types = [cells.one_types[i] for i in order]
        permuted.weights = [cells.weights[i] for i in order]
        permuted._plain = tuple(tuple(r[i][j] for j in order) for i in order)
        assert [wfomc_fo2(universal, n, cells=permuted) for n in (1, 2, 3)] == expected
