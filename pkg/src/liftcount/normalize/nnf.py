"""
Negation normal form.

After :func:`to_nnf` a formula is built from atoms, negated atoms, ``true``,
``false``, ``&``, ``|`` and the two quantifiers. Constants are folded and
vacuous quantifiers dropped (domains are never empty).
"""

from __future__ import annotations

from liftcount.syntax.ast import (
    And,
    Atom,
    Bottom,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Top,
    free_variables,
)


def make_and(left: Formula, right: Formula) -> Formula:
    if isinstance(left, Bottom) or isinstance(right, Bottom):
        return Bottom()
    if isinstance(left, Top):
        return right
    if isinstance(right, Top):
        return left
    return And(left, right)


def make_or(left: Formula, right: Formula) -> Formula:
    if isinstance(left, Top) or isinstance(right, Top):
        return Top()
    if isinstance(left, Bottom):
        return right
    if isinstance(right, Bottom):
        return left
    return Or(left, right)


def _quantify(cls: type[Forall] | type[Exists], var: str, body: Formula) -> Formula:
    if var not in free_variables(body):
        return body
    return cls(var, body)


def _nnf(formula: Formula, positive: bool) -> Formula:
    if isinstance(formula, Atom):
        return formula if positive else Not(formula)
    if isinstance(formula, Top):
        return Top() if positive else Bottom()
    if isinstance(formula, Bottom):
        return Bottom() if positive else Top()
    if isinstance(formula, Not):
        return _nnf(formula.body, not positive)
    if isinstance(formula, (And, Or)):
        left = _nnf(formula.left, positive)
        right = _nnf(formula.right, positive)
        if isinstance(formula, And) == positive:
            return make_and(left, right)
        return make_or(left, right)
    if isinstance(formula, Implies):
        if positive:
            return make_or(_nnf(formula.left, False), _nnf(formula.right, True))
        return make_and(_nnf(formula.left, True), _nnf(formula.right, False))
    if isinstance(formula, Iff):
        a, b = formula.left, formula.right
        if positive:
            return make_and(
                make_or(_nnf(a, False), _nnf(b, True)),
                make_or(_nnf(a, True), _nnf(b, False)),
            )
        return make_or(
            make_and(_nnf(a, True), _nnf(b, False)),
            make_and(_nnf(a, False), _nnf(b, True)),
        )
    body = _nnf(formula.body, positive)
    if isinstance(formula, Forall) == positive:
        return _quantify(Forall, formula.var, body)
    return _quantify(Exists, formula.var, body)


def to_nnf(formula: Formula) -> Formula:
    """Eliminate ``->`` and ``<->`` and push negations down to the atoms."""
    return _nnf(formula, True)


def negate(formula: Formula) -> Formula:
    """Negation normal form of ``~formula``."""
    return _nnf(formula, False)


def is_nnf(formula: Formula) -> bool:
    if isinstance(formula, (Atom, Top, Bottom)):
        return True
    if isinstance(formula, Not):
        return isinstance(formula.body, Atom)
    if isinstance(formula, (And, Or)):
        return is_nnf(formula.left) and is_nnf(formula.right)
    if isinstance(formula, (Forall, Exists)):
        return is_nnf(formula.body)
    return False
