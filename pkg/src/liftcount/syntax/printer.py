"""
Pretty printer producing text that :func:`parse_sentence` reads back.
"""

from __future__ import annotations

from liftcount.syntax.ast import (
    And,
    Atom,
    AxiomRole,
    Bottom,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Sentence,
    Top,
)
from liftcount.types import format_rational

_QUANTIFIER, _IFF, _IMPLIES, _OR, _AND, _NOT, _ATOM = range(7)

_BINARY = {
    Iff: (_IFF, "<->"),
    Implies: (_IMPLIES, "->"),
    Or: (_OR, "|"),
    And: (_AND, "&"),
}


def _precedence(formula: Formula) -> int:
    if isinstance(formula, (Forall, Exists)):
        return _QUANTIFIER
    if isinstance(formula, Not):
        return _NOT
    if isinstance(formula, (Atom, Top, Bottom)):
        return _ATOM
    return _BINARY[type(formula)][0]


def _wrap(text: str) -> str:
    return f"({text})"


def format_formula(formula: Formula, *, top: bool = True) -> str:
    """Render a formula with the minimal parentheses the grammar needs."""
    if isinstance(formula, Atom):
        return f"{formula.predicate}({','.join(formula.args)})"
    if isinstance(formula, Top):
        return "true"
    if isinstance(formula, Bottom):
        return "false"
    if isinstance(formula, (Forall, Exists)):
        keyword = "forall" if isinstance(formula, Forall) else "exists"
        text = f"{keyword} {formula.var}. {format_formula(formula.body, top=True)}"
        return text if top else _wrap(text)
    if isinstance(formula, Not):
        body = format_formula(formula.body, top=False)
        if _QUANTIFIER < _precedence(formula.body) < _NOT:
            body = _wrap(body)
        return f"~{body}"

    level, symbol = _BINARY[type(formula)]
    left = format_formula(formula.left, top=False)
    right = format_formula(formula.right, top=False)
    left_level, right_level = _precedence(formula.left), _precedence(formula.right)
    # -> is right associative, the rest are left associative
    if left_level != _QUANTIFIER and (
        left_level < level or (left_level == level and isinstance(formula, Implies))
    ):
        left = _wrap(left)
    if right_level != _QUANTIFIER and (
        right_level < level or (right_level == level and not isinstance(formula, Implies))
    ):
        right = _wrap(right)
    return f"{left} {symbol} {right}"


def pretty_print(sentence: Sentence) -> str:
    """Render a sentence file: the formula followed by its directives.

    Auxiliary predicates introduced by normalization print as ordinary
    predicates; their weights are emitted explicitly.
    """
    lines = [format_formula(sentence.formula)]
    for predicate in sentence.predicates:
        if predicate.role is AxiomRole.LINEAR_ORDER:
            lines.append(f"#axiom linear_order {predicate.name}")
        elif predicate.role is AxiomRole.SUCCESSOR:
            lines.append(f"#axiom successor {predicate.name}")
    for name, (w, wbar) in sentence.weights.items():
        lines.append(f"#weight {name} {format_rational(w)} {format_rational(wbar)}")
    for constraint in sentence.cardinality_constraints:
        lines.append(
            f"#cardinality {constraint.predicate} {constraint.comparator.value} {constraint.bound}"
        )
    return "\n".join(lines) + "\n"
