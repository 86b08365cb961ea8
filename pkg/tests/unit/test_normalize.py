"""Tests for negation normal form, Skolemization and the universal pair form."""

import pytest

from liftcount.config import LiftCountSettings
from liftcount.errors import NormalizationError, ValidationError
from liftcount.normalize import (
    SKOLEM_WEIGHT,
    UniversalSentence,
    augment_axioms,
    close,
    is_nnf,
    negate,
    normalize,
    skolemize,
    to_nnf,
    to_universal_pair_form,
)
from liftcount.oracle import brute_force_wfomc
from liftcount.syntax import (
    And,
    Atom,
    AxiomRole,
    Bottom,
    Exists,
    Forall,
    Not,
    Or,
    Predicate,
    Top,
    is_quantifier_free,
    parse_formula,
    parse_sentence,
)
from tests.conftest import SentenceGenerator, load_sentence

P = Atom("P", ("x",))
Q = Atom("Q", ("x",))
R = Atom("R", ("x", "y"))


class TestNnf:
    """Tests for to_nnf and negate."""

    def test_implication(self) -> None:
        """Test implications become disjunctions."""
        assert to_nnf(parse_formula("P(x) -> Q(x)")) == Or(Not(P), Q)

    def test_equivalence(self) -> None:
        """Test equivalences expand into two clauses."""
        assert to_nnf(parse_formula("P(x) <-> Q(x)")) == And(Or(Not(P), Q), Or(P, Not(Q)))

    def test_de_morgan_and_quantifiers(self) -> None:
        """Test negation moves through connectives and flips quantifiers."""
        formula = parse_formula("~(forall y. (R(x,y) & P(x)))")
        assert to_nnf(formula) == Exists("y", Or(Not(R), Not(P)))

    def test_constant_folding(self) -> None:
        """Test true and false fold away."""
        assert to_nnf(parse_formula("P(x) & true")) == P
        assert to_nnf(parse_formula("P(x) | ~false")) == Top()
        assert negate(parse_formula("true")) == Bottom()

    def test_vacuous_quantifier_is_dropped(self) -> None:
        """Test a quantifier over an absent variable is dropped."""
        assert to_nnf(parse_formula("forall y. P(x)")) == P

    def test_is_nnf(self) -> None:
        """Test the result is in negation normal form."""
        assert is_nnf(to_nnf(parse_formula("~(P(x) <-> ~exists y. R(x,y))")))
        assert not is_nnf(parse_formula("~~P(x)"))
        assert not is_nnf(parse_formula("P(x) -> Q(x)"))


class TestSkolemize:
    """Tests for skolemize."""

    def test_forall_exists(self) -> None:
        """Test the negated-body Skolem form with weights (1, -1)."""
        sentence = parse_sentence("forall x. exists y. R(x,y)")
        result = skolemize(sentence)
        sk = Atom("Sk0", ("x",))
        assert result.formula == Forall("x", Forall("y", Or(sk, Not(R))))
        assert result.predicate("Sk0") == Predicate("Sk0", 1, AxiomRole.SKOLEM_AUX)
        assert result.weight("Sk0") == SKOLEM_WEIGHT

    def test_universal_sentence_unchanged(self) -> None:
        """Test a universal sentence needs no auxiliaries."""
        sentence = load_sentence("phi1")
        assert skolemize(sentence) is sentence

    def test_fresh_names_avoid_existing_predicates(self) -> None:
        """Test auxiliary names skip taken predicate names."""
        sentence = parse_sentence("forall x. (Sk0(x) | exists y. R(x,y))")
        result = skolemize(sentence)
        assert {p.name for p in result.predicates} == {"Sk0", "R", "Sk1"}

    def test_one_auxiliary_per_existential(self) -> None:
        """Test the two existentials of the train sentence get one Skolem each."""
        result = skolemize(load_sentence("phi_train"))
        auxiliaries = [p.name for p in result.predicates if p.role.is_auxiliary]
        assert auxiliaries == ["Sk0", "Sk1"]

    def test_tseitin_for_second_quantifier(self) -> None:
        """Test a quantifier that cannot join the prefix gets a Tseitin predicate."""
        sentence = parse_sentence("forall x. ((exists y. R(x,y)) | (forall y. R(y,x)))")
        result = skolemize(sentence)
        roles = {p.name: p.role for p in result.predicates}
        assert roles["Tz0"] is AxiomRole.TSEITIN_AUX
        assert result.weight("Tz0") == (1, 1)
        assert sum(1 for role in roles.values() if role is AxiomRole.SKOLEM_AUX) == 2

    def test_result_has_no_existentials(self) -> None:
        """Test Skolemized sentences reach universal pair form."""
        generator = SentenceGenerator(seed=11)
        for _ in range(10):
            result = skolemize(generator.sentence(existential=True))
            universal = to_universal_pair_form(result)
            assert is_quantifier_free(universal.psi)


class TestSkolemPreservesCounts:
    """WFOMC is unchanged by Skolemization."""

    @pytest.mark.parametrize("seed", range(10))
    def test_random_existential_sentences(self, seed: int, settings: LiftCountSettings) -> None:
        """Test Skolemization keeps the count of random sentences."""
        sentence = SentenceGenerator(seed).sentence(existential=True)
        skolemized = skolemize(sentence)
        for n in (1, 2):
            before = brute_force_wfomc(sentence, n, settings=settings).value
            after = brute_force_wfomc(skolemized, n, settings=settings).value
            assert before == after, f"n={n}"

    def test_tseitin_sentence(self, settings: LiftCountSettings) -> None:
        """Test nested quantified parts keep the count."""
        sentence = parse_sentence(
            "forall x. ((exists y. R(x,y)) | (forall y. R(y,x)))\n#weight R 2 -1\n"
        )
        skolemized = skolemize(sentence)
        for n in (1, 2):
            assert (
                brute_force_wfomc(sentence, n, settings=settings).value
                == brute_force_wfomc(skolemized, n, settings=settings).value
            )

    def test_closed_existential(self, settings: LiftCountSettings) -> None:
        """Test a closed existential part keeps the count."""
        sentence = parse_sentence("(exists x. forall y. R(x,y)) & (forall x. (P(x) | exists y. R(y,x)))")
        skolemized = skolemize(sentence)
        for n in (1, 2):
            assert (
                brute_force_wfomc(sentence, n, settings=settings).value
                == brute_force_wfomc(skolemized, n, settings=settings).value
            )

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(10))
    def test_random_existential_sentences_n3(self, seed: int, settings: LiftCountSettings) -> None:
        """Test Skolemization keeps the count at n = 3."""
        sentence = SentenceGenerator(seed).sentence(existential=True)
        skolemized = skolemize(sentence)
        if len(skolemized.predicates) > len(sentence.predicates) + 2:
            pytest.skip("too many auxiliaries for the oracle at n=3")
        assert (
            brute_force_wfomc(sentence, 3, settings=settings).value
            == brute_force_wfomc(skolemized, 3, settings=settings).value
        )


class TestUniversalPairForm:
    """Tests for to_universal_pair_form, augment_axioms and normalize."""

    def test_distributes_prefix(self) -> None:
        """Test universal prefixes merge into one matrix."""
        sentence = parse_sentence("(forall x. P(x)) & (forall y. forall x. R(y,x))")
        universal = to_universal_pair_form(sentence)
        assert universal.psi == And(P, R)

    def test_existential_is_rejected(self) -> None:
        """Test an existential left over is reported."""
        with pytest.raises(NormalizationError) as info:
            to_universal_pair_form(parse_sentence("forall x. exists y. R(x,y)"))
        assert info.value.context.hint == "run skolemize first"
        assert info.value.step == "to_universal_pair_form"

    def test_augment_axioms(self) -> None:
        """Test axiom constraints are added to psi."""
        universal = normalize(load_sentence("top_axioms"))
        assert universal.psi == And(Atom("L", ("x", "x")), Not(Atom("S", ("x", "x"))))

    def test_augment_without_axioms_is_identity(self) -> None:
        """Test augmenting an axiom-free sentence changes nothing."""
        universal = to_universal_pair_form(load_sentence("worked_example"))
        assert augment_axioms(universal) is universal

    def test_normalize_corpus(self) -> None:
        """Test the full pipeline on the train sentence."""
        universal = normalize(load_sentence("phi_train"))
        assert is_quantifier_free(universal.psi)
        assert len(universal.unary_predicates) == 6
        assert universal.linear_order == "L"

    def test_to_sentence_closes_psi(self) -> None:
        """Test the normal form converts back to a closed sentence."""
        universal = to_universal_pair_form(parse_sentence("forall x. P(x)"))
        assert universal.to_sentence().formula == Forall("x", P)
        assert close(R) == Forall("x", Forall("y", R))

    def test_rejects_quantified_psi(self) -> None:
        """Test a quantified matrix is rejected."""
        with pytest.raises(ValidationError):
            UniversalSentence(psi=Forall("x", P), predicates=(Predicate("P", 1),))

    def test_rejects_third_variable(self) -> None:
        """Test a third variable in the matrix is rejected."""
        with pytest.raises(ValidationError):
            UniversalSentence(psi=Atom("P", ("z",)), predicates=(Predicate("P", 1),))

    def test_rejects_unsigned_skolem(self) -> None:
        """Test Skolem predicates must weigh (1, -1)."""
        with pytest.raises(ValidationError, match="Skolem"):
            UniversalSentence(
                psi=Atom("Sk0", ("x",)),
                predicates=(Predicate("Sk0", 1, AxiomRole.SKOLEM_AUX),),
            )
