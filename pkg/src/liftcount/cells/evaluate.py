"""
Boolean evaluation of quantifier-free formulas under a total assignment.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping, Sequence

from liftcount.errors import ValidationError
from liftcount.syntax.ast import (
    And,
    Atom,
    Bottom,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Top,
)
from liftcount.syntax.checks import render_atom

Assignment = Mapping[Atom, bool]


def evaluate(psi: Formula, assignment: Assignment) -> bool:
    """Truth value of ``psi`` under ``assignment``.

    Raises:
        ValidationError: If an atom of ``psi`` has no truth value, or
            ``psi`` contains a quantifier
    """
    if isinstance(psi, Atom):
        try:
            return assignment[psi]
        except KeyError:
            raise ValidationError(
                f"No truth value for atom {render_atom(psi)}", field="assignment"
            ) from None
    if isinstance(psi, Top):
        return True
    if isinstance(psi, Bottom):
        return False
    if isinstance(psi, Not):
        return not evaluate(psi.body, assignment)
    if isinstance(psi, And):
        return evaluate(psi.left, assignment) and evaluate(psi.right, assignment)
    if isinstance(psi, Or):
        return evaluate(psi.left, assignment) or evaluate(psi.right, assignment)
    if isinstance(psi, Implies):
        return not evaluate(psi.left, assignment) or evaluate(psi.right, assignment)
    if isinstance(psi, Iff):
        return evaluate(psi.left, assignment) == evaluate(psi.right, assignment)
    raise ValidationError("Cannot evaluate a quantified formula", field="psi")


Compiled = Callable[[Sequence[bool]], bool]


def compile_formula(psi: Formula, slots: Sequence[Atom]) -> Compiled:
    """Turn ``psi`` into a function of a bit vector indexed like ``slots``.

    Same semantics as :func:`evaluate`, for the inner loops of table
    construction.
    """
    index = {atom: i for i, atom in enumerate(slots)}

    def build(node: Formula) -> Compiled:
        if isinstance(node, Atom):
            if node not in index:
                raise ValidationError(
                    f"No truth value for atom {render_atom(node)}", field="slots"
                )
            i = index[node]
            return lambda bits: bits[i]
        if isinstance(node, Top):
            return lambda bits: True
        if isinstance(node, Bottom):
            return lambda bits: False
        if isinstance(node, Not):
            body = build(node.body)
            return lambda bits: not body(bits)
        if isinstance(node, (And, Or, Implies, Iff)):
            left, right = build(node.left), build(node.right)
            if isinstance(node, And):
                return lambda bits: left(bits) and right(bits)
            if isinstance(node, Or):
                return lambda bits: left(bits) or right(bits)
            if isinstance(node, Implies):
                return lambda bits: not left(bits) or right(bits)
            return lambda bits: left(bits) == right(bits)
        raise ValidationError("Cannot evaluate a quantified formula", field="psi")

    return build(psi)
