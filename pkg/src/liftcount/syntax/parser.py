"""
Parser for the sentence file format.

A sentence file holds one formula, which may span several lines, and
directives on lines of their own::

    % phi_1: ordered set partitions
    forall x. forall y. ((B(x,y) -> S(x,y)) & ((S(x,y) & L(x,y)) -> B(x,y)))
    #axiom linear_order L
    #axiom successor S
    #weight B 2 1
    #cardinality U <= 3

Connectives bind as ``~`` > ``&`` > ``|`` > ``->`` > ``<->``; ``->`` is right
associative, the others left associative. A quantifier scopes as far right as
possible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

from liftcount.errors import (
    ErrorContext,
    SentenceSyntaxError,
    TwoVariableError,
    ValidationError,
)
from liftcount.syntax.ast import (
    And,
    Atom,
    AxiomRole,
    Bottom,
    CardinalityConstraint,
    Comparator,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Predicate,
    Sentence,
    Top,
    Weight,
    free_variables,
)
from liftcount.syntax.checks import check_two_variable, render_atom
from liftcount.types import parse_rational

GRAMMAR = r"""
?start: formula

?formula: iff

?iff: imp
    | iff "<->" imp         -> iff

?imp: disj
    | disj "->" imp         -> implies

?disj: conj
     | disj "|" conj        -> or_

?conj: unary
     | conj "&" unary       -> and_

?unary: "~" unary           -> not_
      | atom
      | "true"              -> top
      | "false"             -> bottom
      | "(" formula ")"
      | QUANTIFIER VAR "." formula -> quantified

atom: PRED "(" VAR ("," VAR)* ")"

QUANTIFIER: "forall" | "exists"
PRED: /[A-Z][A-Za-z0-9_]*/
VAR: /[a-z][A-Za-z0-9_]*/
COMMENT: /%[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""

_AXIOM_ROLES = {
    "linear_order": AxiomRole.LINEAR_ORDER,
    "successor": AxiomRole.SUCCESSOR,
}


@lru_cache(maxsize=1)
def _lark() -> Lark:
    # Shift/reduce conflicts after a quantifier body resolve as shift, which is
    # exactly "a quantifier scopes as far right as possible".
    return Lark(GRAMMAR, parser="lalr", propagate_positions=False, maybe_placeholders=False)


class _FormulaBuilder(Transformer):  # type: ignore[type-arg]
    """Turns the parse tree into AST nodes and remembers atom positions."""

    def __init__(self) -> None:
        super().__init__()
        self.positions: dict[Atom, tuple[int, int]] = {}

    @v_args(inline=True)
    def iff(self, left: Formula, right: Formula) -> Formula:
        return Iff(left, right)

    @v_args(inline=True)
    def implies(self, left: Formula, right: Formula) -> Formula:
        return Implies(left, right)

    @v_args(inline=True)
    def or_(self, left: Formula, right: Formula) -> Formula:
        return Or(left, right)

    @v_args(inline=True)
    def and_(self, left: Formula, right: Formula) -> Formula:
        return And(left, right)

    @v_args(inline=True)
    def not_(self, body: Formula) -> Formula:
        return Not(body)

    def top(self, _: list[Any]) -> Formula:
        return Top()

    def bottom(self, _: list[Any]) -> Formula:
        return Bottom()

    @v_args(inline=True)
    def quantified(self, quantifier: Token, var: Token, body: Formula) -> Formula:
        if str(quantifier) == "forall":
            return Forall(str(var), body)
        return Exists(str(var), body)

    def atom(self, children: list[Token]) -> Formula:
        name, *args = children
        node = Atom(str(name), tuple(str(a) for a in args))
        self.positions.setdefault(node, (name.line or 1, name.column or 1))
        return node


@dataclass
class _Directives:
    axioms: list[tuple[str, AxiomRole, int]] = field(default_factory=list)
    weights: list[tuple[str, Weight, int]] = field(default_factory=list)
    constraints: list[tuple[CardinalityConstraint, int]] = field(default_factory=list)


def _directive_error(message: str, line: int, text: str) -> SentenceSyntaxError:
    error = SentenceSyntaxError(message, line=line, column=1)
    error.context.details["directive"] = text
    return error


def _parse_directive(text: str, line: int, into: _Directives) -> None:
    body = text.split("%", 1)[0]
    tokens = body[1:].split()
    if not tokens:
        raise _directive_error("Empty directive", line, text)
    keyword, *args = tokens
    if keyword == "axiom":
        if len(args) != 2 or args[0] not in _AXIOM_ROLES:
            raise _directive_error(
                "Expected '#axiom linear_order <P>' or '#axiom successor <P>'", line, text
            )
        into.axioms.append((args[1], _AXIOM_ROLES[args[0]], line))
    elif keyword == "weight":
        if len(args) != 3:
            raise _directive_error("Expected '#weight <P> <w> <w_bar>'", line, text)
        positive, negative = parse_rational(args[1]), parse_rational(args[2])
        if positive is None or negative is None:
            raise _directive_error(
                "Weights must be exact rationals such as -1, 3/2 or 0.25", line, text
            )
        into.weights.append((args[0], (positive, negative), line))
    elif keyword == "cardinality":
        if len(args) != 3:
            raise _directive_error("Expected '#cardinality <P> <cmp> <k>'", line, text)
        try:
            comparator = Comparator.parse(args[1])
        except ValueError:
            raise _directive_error(f"Unknown comparator {args[1]!r}", line, text) from None
        if not args[2].isdigit():
            raise _directive_error("Cardinality bound must be a natural number", line, text)
        into.constraints.append((CardinalityConstraint(args[0], comparator, int(args[2])), line))
    else:
        raise _directive_error(f"Unknown directive #{keyword}", line, text)


def _split_directives(text: str) -> tuple[str, _Directives]:
    """Blank out directive lines so formula positions keep their line numbers."""
    directives = _Directives()
    formula_lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            _parse_directive(stripped, number, directives)
            formula_lines.append("")
        else:
            formula_lines.append(raw)
    return "\n".join(formula_lines), directives


def _syntax_error(exc: UnexpectedInput) -> SentenceSyntaxError:
    if isinstance(exc, UnexpectedEOF) or (
        isinstance(exc, UnexpectedToken) and exc.token.type == "$END"
    ):
        message = "Unexpected end of input"
    elif isinstance(exc, UnexpectedToken):
        message = f"Unexpected token {str(exc.token)!r}"
    elif isinstance(exc, UnexpectedCharacters):
        message = f"Unexpected character {exc.char!r}"
    else:
        message = "Syntax error"
    line = getattr(exc, "line", None)
    column = getattr(exc, "column", None)
    if not isinstance(line, int) or line < 1:
        line, column = None, None
    return SentenceSyntaxError(message, line=line, column=column)


def _build_predicate_table(
    formula: Formula,
    positions: dict[Atom, tuple[int, int]],
    directives: _Directives,
) -> tuple[Predicate, ...]:
    arities: dict[str, int] = {}
    for atom, (line, column) in positions.items():
        known = arities.setdefault(atom.predicate, len(atom.args))
        if known != len(atom.args) or len(atom.args) > 2:
            error = ValidationError(
                f"Arity mismatch in {atom.predicate}({','.join(atom.args)})",
                ErrorContext(source="syntax", location=(line, column)),
                field=atom.predicate,
                expected=known if known <= 2 else "1 or 2",
                actual=len(atom.args),
            )
            raise error

    roles: dict[str, AxiomRole] = {}
    for name, role, line in directives.axioms:
        if arities.setdefault(name, 2) != 2:
            raise ValidationError(
                f"Axiom predicate {name} must be binary",
                ErrorContext(source="syntax", location=(line, 1)),
                field=name,
                expected=2,
                actual=arities[name],
            )
        if roles.get(name, role) is not role:
            raise ValidationError(
                f"Predicate {name} declared with two axiom roles",
                ErrorContext(source="syntax", location=(line, 1)),
                field=name,
            )
        roles[name] = role

    # dicts keep insertion order: formula atoms first, then directive-only names
    return tuple(
        Predicate(name, arity, roles.get(name, AxiomRole.NONE)) for name, arity in arities.items()
    )


def parse_formula(text: str) -> Formula:
    """Parse a bare formula (no directives, no validation)."""
    try:
        tree = _lark().parse(text)
    except UnexpectedInput as exc:
        raise _syntax_error(exc) from exc
    return _FormulaBuilder().transform(tree)


def parse_sentence(text: str) -> Sentence:
    """Parse and validate a sentence file.

    Args:
        text: File contents (UTF-8 decoded)

    Returns:
        The validated sentence

    Raises:
        SentenceSyntaxError: On malformed text or directives
        ValidationError: On arity mismatches, unknown predicates in
            directives, free variables
        TwoVariableError: When a variable other than x, y occurs
    """
    formula_text, directives = _split_directives(text.replace("\r\n", "\n"))
    if not formula_text.strip() or all(
        not line.strip() or line.strip().startswith("%") for line in formula_text.splitlines()
    ):
        raise SentenceSyntaxError("Missing formula")

    try:
        tree = _lark().parse(formula_text)
    except UnexpectedInput as exc:
        raise _syntax_error(exc) from exc
    builder = _FormulaBuilder()
    formula = builder.transform(tree)

    predicates = _build_predicate_table(formula, builder.positions, directives)
    known = {p.name for p in predicates}

    for name, _, line in directives.weights:
        if name not in known:
            raise ValidationError(
                f"Weight for unknown predicate {name}",
                ErrorContext(source="syntax", location=(line, 1)),
                field=name,
            )
    for constraint, line in directives.constraints:
        if constraint.predicate not in known:
            raise ValidationError(
                f"Cardinality constraint on unknown predicate {constraint.predicate}",
                ErrorContext(source="syntax", location=(line, 1)),
                field=constraint.predicate,
            )

    sentence = Sentence(
        formula=formula,
        predicates=predicates,
        weights={name: weight for name, weight, _ in directives.weights},
        cardinality_constraints=tuple(c for c, _ in directives.constraints),
    )
    try:
        check_two_variable(sentence)
    except TwoVariableError as exc:
        position = next(
            (pos for atom, pos in builder.positions.items() if render_atom(atom) == exc.offending),
            None,
        )
        if position is not None:
            exc.context.location = position
            exc.args = (exc._format_message(),)
        raise

    free = free_variables(formula)
    if free:
        raise ValidationError(
            f"Formula has free variables: {', '.join(sorted(free))}",
            field="formula",
            expected="closed formula",
            actual=sorted(free),
        ).with_hint("bind every variable with forall or exists")
    return sentence
