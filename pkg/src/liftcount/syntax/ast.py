"""
Abstract syntax of two-variable sentences.

Formulas are immutable trees of frozen dataclasses, so structurally equal
formulas compare (and hash) equal. A :class:`Sentence` bundles the closed
formula with its predicate table, weights and unary cardinality constraints.
"""

from __future__ import annotations

import operator
from collections.abc import Callable, Iterator, Mapping
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Union

from liftcount.errors import ValidationError
from liftcount.types import ONE, to_rational

VARIABLES = ("x", "y")
"""The only variable names of the two-variable fragment."""


class AxiomRole(str, Enum):
    """Special meaning attached to a predicate."""

    NONE = "none"
    LINEAR_ORDER = "linear_order"
    SUCCESSOR = "successor"
    SKOLEM_AUX = "skolem_aux"
    TSEITIN_AUX = "tseitin_aux"

    @property
    def is_axiom(self) -> bool:
        """Whether the role constrains the interpretation of the predicate."""
        return self in (AxiomRole.LINEAR_ORDER, AxiomRole.SUCCESSOR)

    @property
    def is_auxiliary(self) -> bool:
        """Whether the predicate was introduced by normalization."""
        return self in (AxiomRole.SKOLEM_AUX, AxiomRole.TSEITIN_AUX)


@dataclass(frozen=True)
class Predicate:
    """A predicate symbol of arity 1 or 2."""

    name: str
    arity: int
    role: AxiomRole = AxiomRole.NONE

    def __post_init__(self) -> None:
        if self.arity not in (1, 2):
            raise ValidationError(
                f"Predicate {self.name} has arity {self.arity}",
                field=self.name,
                expected="1 or 2",
                actual=self.arity,
            )
        if self.role.is_axiom and self.arity != 2:
            raise ValidationError(
                f"Axiom predicate {self.name} must be binary",
                field=self.name,
                expected=2,
                actual=self.arity,
            )


# ---------------------------------------------------------------------------
# Formula nodes
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Atom:
    """``P(v1, ..., vk)`` over variable names."""

    predicate: str
    args: tuple[str, ...]


@dataclass(frozen=True, slots=True)
class Top:
    """The constant ``true``."""


@dataclass(frozen=True, slots=True)
class Bottom:
    """The constant ``false``."""


@dataclass(frozen=True, slots=True)
class Not:
    body: Formula


@dataclass(frozen=True, slots=True)
class And:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Implies:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Iff:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Forall:
    var: str
    body: Formula


@dataclass(frozen=True, slots=True)
class Exists:
    var: str
    body: Formula


Formula = Union[Atom, Top, Bottom, Not, And, Or, Implies, Iff, Forall, Exists]
BinaryNode = (And, Or, Implies, Iff)
QuantifierNode = (Forall, Exists)


def conjoin(formulas: list[Formula] | tuple[Formula, ...]) -> Formula:
    """Left-nested conjunction; ``true`` for an empty list."""
    if not formulas:
        return Top()
    result = formulas[0]
    for formula in formulas[1:]:
        result = And(result, formula)
    return result


def disjoin(formulas: list[Formula] | tuple[Formula, ...]) -> Formula:
    """Left-nested disjunction; ``false`` for an empty list."""
    if not formulas:
        return Bottom()
    result = formulas[0]
    for formula in formulas[1:]:
        result = Or(result, formula)
    return result


def conjuncts(formula: Formula) -> Iterator[Formula]:
    """Yield the maximal non-conjunction subformulas of a conjunction."""
    if isinstance(formula, And):
        yield from conjuncts(formula.left)
        yield from conjuncts(formula.right)
    else:
        yield formula


def subformulas(formula: Formula) -> Iterator[Formula]:
    """Pre-order traversal of all subformulas, the formula included."""
    yield formula
    if isinstance(formula, Not):
        yield from subformulas(formula.body)
    elif isinstance(formula, BinaryNode):
        yield from subformulas(formula.left)
        yield from subformulas(formula.right)
    elif isinstance(formula, QuantifierNode):
        yield from subformulas(formula.body)


def atoms(formula: Formula) -> Iterator[Atom]:
    """Yield every atom occurrence in pre-order."""
    for node in subformulas(formula):
        if isinstance(node, Atom):
            yield node


def variables(formula: Formula) -> set[str]:
    """All variable names occurring in the formula, bound or free."""
    names: set[str] = set()
    for node in subformulas(formula):
        if isinstance(node, Atom):
            names.update(node.args)
        elif isinstance(node, QuantifierNode):
            names.add(node.var)
    return names


def free_variables(formula: Formula) -> frozenset[str]:
    """Variables with an occurrence not bound by an enclosing quantifier."""
    if isinstance(formula, Atom):
        return frozenset(formula.args)
    if isinstance(formula, (Top, Bottom)):
        return frozenset()
    if isinstance(formula, Not):
        return free_variables(formula.body)
    if isinstance(formula, BinaryNode):
        return free_variables(formula.left) | free_variables(formula.right)
    return free_variables(formula.body) - {formula.var}


def is_quantifier_free(formula: Formula) -> bool:
    return not any(isinstance(node, QuantifierNode) for node in subformulas(formula))


def map_atoms(formula: Formula, fn: Callable[[Atom], Formula]) -> Formula:
    """Rebuild ``formula`` with every atom replaced by ``fn(atom)``."""
    if isinstance(formula, Atom):
        return fn(formula)
    if isinstance(formula, (Top, Bottom)):
        return formula
    if isinstance(formula, Not):
        return Not(map_atoms(formula.body, fn))
    if isinstance(formula, BinaryNode):
        return type(formula)(map_atoms(formula.left, fn), map_atoms(formula.right, fn))
    return type(formula)(formula.var, map_atoms(formula.body, fn))


def rename_variables(formula: Formula, mapping: Mapping[str, str]) -> Formula:
    """Rename variables everywhere, binders included.

    With ``{"x": "y", "y": "x"}`` this swaps the two variables, which keeps
    the meaning of a closed formula.
    """
    if isinstance(formula, Atom):
        return Atom(formula.predicate, tuple(mapping.get(a, a) for a in formula.args))
    if isinstance(formula, (Top, Bottom)):
        return formula
    if isinstance(formula, Not):
        return Not(rename_variables(formula.body, mapping))
    if isinstance(formula, BinaryNode):
        return type(formula)(
            rename_variables(formula.left, mapping),
            rename_variables(formula.right, mapping),
        )
    return type(formula)(mapping.get(formula.var, formula.var), rename_variables(formula.body, mapping))


SWAP_XY = {"x": "y", "y": "x"}


# ---------------------------------------------------------------------------
# Sentences
# ---------------------------------------------------------------------------


class Comparator(str, Enum):
    """Comparison operator of a cardinality constraint."""

    LT = "<"
    LE = "<="
    EQ = "="
    GE = ">="
    GT = ">"

    def holds(self, count: int, bound: int) -> bool:
        """Evaluate ``count <cmp> bound``."""
        return bool(_COMPARATOR_FUNCS[self](count, bound))

    @classmethod
    def parse(cls, text: str) -> Comparator:
        """Parse ASCII or Unicode comparison symbols."""
        return cls(_UNICODE_COMPARATORS.get(text, text))


_COMPARATOR_FUNCS: dict[Comparator, Callable[[int, int], Any]] = {
    Comparator.LT: operator.lt,
    Comparator.LE: operator.le,
    Comparator.EQ: operator.eq,
    Comparator.GE: operator.ge,
    Comparator.GT: operator.gt,
}
_UNICODE_COMPARATORS = {"≤": "<=", "≥": ">=", "==": "="}


@dataclass(frozen=True)
class CardinalityConstraint:
    """``|P| <cmp> bound`` on a unary predicate."""

    predicate: str
    comparator: Comparator
    bound: int

    def holds(self, count: int) -> bool:
        return self.comparator.holds(count, self.bound)

    def __str__(self) -> str:
        return f"|{self.predicate}| {self.comparator.value} {self.bound}"


Weight = tuple[Any, Any]
"""(w, w̄): weights of positive and negative ground literals."""

DEFAULT_WEIGHT: Weight = (ONE, ONE)


class Vocabulary:
    """Predicate-table queries shared by sentences and their normal forms."""

    predicates: tuple[Predicate, ...]
    weights: Mapping[str, Weight]

    def predicate(self, name: str) -> Predicate:
        for predicate in self.predicates:
            if predicate.name == name:
                return predicate
        raise KeyError(name)

    def weight(self, name: str) -> Weight:
        """(w, w̄) of a predicate, defaulting to (1, 1)."""
        return self.weights.get(name, DEFAULT_WEIGHT)

    def role_holder(self, role: AxiomRole) -> str | None:
        """Name of the predicate with ``role``, if any."""
        for predicate in self.predicates:
            if predicate.role is role:
                return predicate.name
        return None

    @property
    def linear_order(self) -> str | None:
        return self.role_holder(AxiomRole.LINEAR_ORDER)

    @property
    def successor(self) -> str | None:
        return self.role_holder(AxiomRole.SUCCESSOR)

    @property
    def axioms(self) -> tuple[str, ...]:
        """Declared axiom roles, e.g. ``("linear_order", "successor")``."""
        return tuple(p.role.value for p in self.predicates if p.role.is_axiom)

    @property
    def unary_predicates(self) -> tuple[Predicate, ...]:
        return tuple(p for p in self.predicates if p.arity == 1)

    @property
    def binary_predicates(self) -> tuple[Predicate, ...]:
        return tuple(p for p in self.predicates if p.arity == 2)


def validate_vocabulary(
    predicates: tuple[Predicate, ...],
    weights: Mapping[str, Weight],
    constraints: tuple[CardinalityConstraint, ...],
) -> dict[str, Weight]:
    """Check a predicate table with its weights and constraints.

    Returns:
        The weights converted to exact rationals
    """
    table = {p.name: p for p in predicates}
    if len(table) != len(predicates):
        raise ValidationError("Duplicate predicate in predicate table", field="predicates")
    for role in (AxiomRole.LINEAR_ORDER, AxiomRole.SUCCESSOR):
        holders = [p.name for p in predicates if p.role is role]
        if len(holders) > 1:
            raise ValidationError(
                f"At most one predicate may have role {role.value}",
                field=role.value,
                expected=1,
                actual=holders,
            )
    normalized: dict[str, Weight] = {}
    for name, (w, wbar) in weights.items():
        if name not in table:
            raise ValidationError(f"Weight for unknown predicate {name}", field=name)
        normalized[name] = (to_rational(w), to_rational(wbar))
    for constraint in constraints:
        predicate = table.get(constraint.predicate)
        if predicate is None:
            raise ValidationError(
                f"Cardinality constraint on unknown predicate {constraint.predicate}",
                field=constraint.predicate,
            )
        if predicate.arity != 1:
            raise ValidationError(
                f"Cardinality constraints are supported on unary predicates only: {constraint}",
                field=constraint.predicate,
                expected=1,
                actual=predicate.arity,
            )
        if constraint.bound < 0:
            raise ValidationError(f"Negative cardinality bound in {constraint}")
    return normalized


def check_atoms(formula: Formula, predicates: tuple[Predicate, ...]) -> None:
    """Every atom names a known predicate with the right number of arguments."""
    table = {p.name: p for p in predicates}
    for atom in atoms(formula):
        predicate = table.get(atom.predicate)
        if predicate is None:
            raise ValidationError(f"Unknown predicate {atom.predicate}", field=atom.predicate)
        if predicate.arity != len(atom.args):
            raise ValidationError(
                f"Arity mismatch in {atom.predicate}({', '.join(atom.args)})",
                field=atom.predicate,
                expected=predicate.arity,
                actual=len(atom.args),
            )


@dataclass(frozen=True)
class Sentence(Vocabulary):
    """A closed two-variable formula with its vocabulary and weighting.

    Attributes:
        formula: The closed formula
        predicates: Predicate table in canonical order
        weights: Explicit weights; other predicates weigh (1, 1)
        cardinality_constraints: Constraints on unary predicate sizes
    """

    formula: Formula
    predicates: tuple[Predicate, ...]
    weights: Mapping[str, Weight] = field(default_factory=dict)
    cardinality_constraints: tuple[CardinalityConstraint, ...] = ()

    def __post_init__(self) -> None:
        normalized = validate_vocabulary(
            self.predicates, self.weights, self.cardinality_constraints
        )
        check_atoms(self.formula, self.predicates)
        object.__setattr__(self, "weights", normalized)

    def replace(self, **changes: Any) -> Sentence:
        """Copy with some fields replaced (re-validated)."""
        values = {
            "formula": self.formula,
            "predicates": self.predicates,
            "weights": self.weights,
            "cardinality_constraints": self.cardinality_constraints,
        }
        values.update(changes)
        return Sentence(**values)
