"""
Universal pair form ``forall x forall y psi(x,y)``.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any

from liftcount.errors import ValidationError
from liftcount.normalize.nnf import make_and
from liftcount.normalize.skolem import SKOLEM_WEIGHT, PrefixBuilder, close, skolemize
from liftcount.syntax.ast import (
    VARIABLES,
    Atom,
    AxiomRole,
    CardinalityConstraint,
    Formula,
    Not,
    Predicate,
    Sentence,
    Top,
    Vocabulary,
    Weight,
    check_atoms,
    free_variables,
    is_quantifier_free,
    validate_vocabulary,
)
from liftcount.telemetry import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class UniversalSentence(Vocabulary):
    """A sentence ``forall x forall y psi`` with quantifier-free ``psi``.

    Attributes:
        psi: Quantifier-free matrix over x and y
        predicates: Predicate table, auxiliaries included
        weights: Explicit weights; Skolem auxiliaries weigh (1, -1)
        cardinality_constraints: Constraints on unary predicate sizes
    """

    psi: Formula
    predicates: tuple[Predicate, ...]
    weights: Mapping[str, Weight] = field(default_factory=dict)
    cardinality_constraints: tuple[CardinalityConstraint, ...] = ()

    def __post_init__(self) -> None:
        if not is_quantifier_free(self.psi):
            raise ValidationError("psi must be quantifier-free", field="psi")
        extra = free_variables(self.psi) - set(VARIABLES)
        if extra:
            raise ValidationError(
                f"psi mentions variables other than x, y: {', '.join(sorted(extra))}",
                field="psi",
            )
        normalized = validate_vocabulary(
            self.predicates, self.weights, self.cardinality_constraints
        )
        check_atoms(self.psi, self.predicates)
        for predicate in self.predicates:
            if predicate.role is AxiomRole.SKOLEM_AUX and normalized.get(predicate.name) != SKOLEM_WEIGHT:
                raise ValidationError(
                    f"Skolem predicate {predicate.name} must weigh (1, -1)",
                    field=predicate.name,
                    expected="(1, -1)",
                    actual=normalized.get(predicate.name),
                )
        object.__setattr__(self, "weights", normalized)

    def to_sentence(self) -> Sentence:
        """The equivalent closed sentence, e.g. for the brute-force oracle."""
        return Sentence(
            formula=close(self.psi),
            predicates=self.predicates,
            weights=self.weights,
            cardinality_constraints=self.cardinality_constraints,
        )

    def replace(self, **changes: Any) -> UniversalSentence:
        values = {
            "psi": self.psi,
            "predicates": self.predicates,
            "weights": self.weights,
            "cardinality_constraints": self.cardinality_constraints,
        }
        values.update(changes)
        return UniversalSentence(**values)


def to_universal_pair_form(sentence: Sentence) -> UniversalSentence:
    """Distribute the universal prefix over the conjuncts of ``sentence``.

    ``psi`` is the conjunction (in negation normal form) of the conjuncts'
    matrices; a conjunct over x alone keeps y unused.

    Raises:
        NormalizationError: If an existential quantifier remains, or a
            universal one sits where it cannot be pulled to the prefix
    """
    blocks = PrefixBuilder(sentence, strict=True).build()
    psi: Formula = Top()
    for block in blocks:
        psi = make_and(psi, block)
    return UniversalSentence(
        psi=psi,
        predicates=sentence.predicates,
        weights=sentence.weights,
        cardinality_constraints=sentence.cardinality_constraints,
    )


def augment_axioms(universal: UniversalSentence) -> UniversalSentence:
    """Conjoin ``L(x,x)`` and ``~S(x,x)`` for the declared axiom predicates."""
    psi = universal.psi
    if universal.linear_order is not None:
        psi = make_and(psi, Atom(universal.linear_order, ("x", "x")))
    if universal.successor is not None:
        psi = make_and(psi, Not(Atom(universal.successor, ("x", "x"))))
    if psi is universal.psi:
        return universal
    return universal.replace(psi=psi)


def normalize(sentence: Sentence) -> UniversalSentence:
    """skolemize, then to_universal_pair_form, then augment_axioms."""
    universal = augment_axioms(to_universal_pair_form(skolemize(sentence)))
    logger.debug(
        "Normalized sentence",
        predicates=len(universal.predicates),
        auxiliaries=sum(1 for p in universal.predicates if p.role.is_auxiliary),
    )
    return universal
