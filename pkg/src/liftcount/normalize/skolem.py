"""
Skolemization of two-variable sentences.

A block ``forall x. exists y. phi(x,y)`` becomes
``forall x. forall y. (Sk(x) | ~phi(x,y))`` with ``w(Sk) = 1`` and
``w̄(Sk) = -1``: per element the Skolem literal contributes ``1 - 1`` exactly
when no witness exists, so the weighted count is unchanged.

Quantified subformulas that cannot be moved to the ``forall x forall y``
prefix are replaced by a fresh unary Tseitin predicate ``Tz<i>`` whose
definition (an equivalence) is Skolemized in turn. Inner subformulas are
handled before outer ones, so auxiliary names follow that order.
"""

from __future__ import annotations

from collections.abc import Iterator

from liftcount.errors import NormalizationError
from liftcount.normalize.nnf import make_and, make_or, negate, to_nnf
from liftcount.syntax.ast import (
    SWAP_XY,
    And,
    Atom,
    AxiomRole,
    Exists,
    Forall,
    Formula,
    Not,
    Or,
    Predicate,
    Sentence,
    Top,
    Weight,
    conjoin,
    conjuncts,
    free_variables,
    rename_variables,
)
from liftcount.telemetry import get_logger
from liftcount.types import ONE

logger = get_logger(__name__)

SKOLEM_WEIGHT: Weight = (ONE, -ONE)
SKOLEM_PREFIX = "Sk"
TSEITIN_PREFIX = "Tz"


def _outermost_quantified(formula: Formula) -> list[Formula]:
    if isinstance(formula, (Forall, Exists)):
        return [formula]
    if isinstance(formula, (And, Or)):
        return _outermost_quantified(formula.left) + _outermost_quantified(formula.right)
    return []


def _replace_outermost(formula: Formula, replacements: Iterator[Formula]) -> Formula:
    if isinstance(formula, (Forall, Exists)):
        return next(replacements)
    if isinstance(formula, And):
        left = _replace_outermost(formula.left, replacements)
        return make_and(left, _replace_outermost(formula.right, replacements))
    if isinstance(formula, Or):
        left = _replace_outermost(formula.left, replacements)
        return make_or(left, _replace_outermost(formula.right, replacements))
    return formula


def close(psi: Formula) -> Formula:
    """Universally close a quantifier-free formula over x and y."""
    free = free_variables(psi)
    if "y" in free:
        psi = Forall("y", psi)
    if "x" in free:
        psi = Forall("x", psi)
    return psi


class PrefixBuilder:
    """Rewrites an NNF sentence into quantifier-free blocks ``psi(x,y)``.

    The sentence is equivalent (for weighted counting, given the auxiliary
    weights) to the conjunction of ``forall x forall y psi`` over all blocks.
    In strict mode no auxiliary may be introduced and the first attempt
    raises :class:`NormalizationError`.
    """

    def __init__(self, sentence: Sentence, *, strict: bool = False) -> None:
        self.sentence = sentence
        self.strict = strict
        self.blocks: list[Formula] = []
        self.auxiliaries: list[Predicate] = []
        self.weights: dict[str, Weight] = {}
        self._taken = {p.name for p in sentence.predicates}
        self._counters = {SKOLEM_PREFIX: 0, TSEITIN_PREFIX: 0}

    def build(self) -> list[Formula]:
        for conjunct in conjuncts(to_nnf(self.sentence.formula)):
            self._top(conjunct)
        return self.blocks

    def _fresh(self, prefix: str, role: AxiomRole, reason: str) -> str:
        if self.strict:
            raise NormalizationError(reason, step="to_universal_pair_form").with_hint(
                "run skolemize first"
            )
        while True:
            name = f"{prefix}{self._counters[prefix]}"
            self._counters[prefix] += 1
            if name not in self._taken:
                break
        self._taken.add(name)
        self.auxiliaries.append(Predicate(name, 1, role))
        if role is AxiomRole.SKOLEM_AUX:
            self.weights[name] = SKOLEM_WEIGHT
        return name

    def _emit(self, psi: Formula) -> None:
        if not isinstance(psi, Top):
            self.blocks.append(psi)

    def _skolem(self, phi: Formula) -> None:
        """Emit ``forall x exists y phi``."""
        name = self._fresh(
            SKOLEM_PREFIX, AxiomRole.SKOLEM_AUX, "Formula still contains an existential quantifier"
        )
        self._emit(make_or(Atom(name, ("x",)), negate(phi)))

    def _top(self, conjunct: Formula) -> None:
        if isinstance(conjunct, Forall) and conjunct.var == "y":
            conjunct = rename_variables(conjunct, SWAP_XY)
        if isinstance(conjunct, Forall):
            for part in conjuncts(conjunct.body):
                self._under_x(part)
        else:
            # closed, so an outer forall x is vacuous
            self._under_x(conjunct)

    def _under_x(self, beta: Formula) -> None:
        """Emit blocks for ``forall x beta`` where only x may be free in beta."""
        nodes = _outermost_quantified(beta)
        if not nodes:
            self._emit(beta)
            return
        keep = next((i for i, node in enumerate(nodes) if isinstance(node, Exists)), 0)
        kept: Formula = nodes[keep]
        replacements: list[Formula] = []
        for index, node in enumerate(nodes):
            if index == keep:
                if node.var == "x":
                    node = rename_variables(node, SWAP_XY)
                kept = node
                replacements.append(self._flatten(node.body))
            else:
                replacements.append(self._define(node))
        matrix = _replace_outermost(beta, iter(replacements))
        if isinstance(kept, Forall):
            self._emit(matrix)
        else:
            self._skolem(matrix)

    def _flatten(self, formula: Formula) -> Formula:
        """Replace every quantified subformula by its Tseitin atom."""
        nodes = _outermost_quantified(formula)
        if not nodes:
            return formula
        return _replace_outermost(formula, iter([self._define(node) for node in nodes]))

    def _define(self, node: Formula) -> Formula:
        assert isinstance(node, (Forall, Exists))
        if self.strict:
            reason = (
                "Formula still contains an existential quantifier"
                if isinstance(node, Exists)
                else f"Quantifier 'forall {node.var}' cannot be moved to the prefix"
            )
            self._fresh(TSEITIN_PREFIX, AxiomRole.TSEITIN_AUX, reason)
        free = sorted(free_variables(node))
        usage = free[0] if free else "x"
        if node.var == "x":
            node = rename_variables(node, SWAP_XY)
        body = self._flatten(node.body)
        name = self._fresh(TSEITIN_PREFIX, AxiomRole.TSEITIN_AUX, "")
        z = Atom(name, ("x",))
        if isinstance(node, Forall):
            self._emit(make_or(Not(z), body))
            self._skolem(make_or(z, negate(body)))
        else:
            self._emit(make_or(negate(body), z))
            self._skolem(make_or(Not(z), body))
        return Atom(name, (usage,))


def skolemize(sentence: Sentence) -> Sentence:
    """Remove existential quantifiers using signed-weight auxiliaries.

    A sentence that needs no auxiliary predicate is returned unchanged.
    Otherwise the result is a conjunction of universally closed
    quantifier-free blocks; ``Sk<i>`` predicates weigh (1, -1) and ``Tz<i>``
    predicates (1, 1).
    """
    builder = PrefixBuilder(sentence)
    blocks = builder.build()
    if not builder.auxiliaries:
        return sentence
    logger.debug(
        "Skolemized sentence",
        auxiliaries=[p.name for p in builder.auxiliaries],
        blocks=len(blocks),
    )
    return sentence.replace(
        formula=conjoin([close(psi) for psi in blocks]),
        predicates=sentence.predicates + tuple(builder.auxiliaries),
        weights={**sentence.weights, **builder.weights},
    )
