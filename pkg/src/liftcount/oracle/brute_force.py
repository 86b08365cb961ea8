"""
Brute-force WFOMC by enumerating interpretations on a tiny domain.

The sentence is evaluated with its quantifiers, directly over the domain,
without going through normalization. Axiom predicates are not enumerated:
a linear order L is fixed to the natural order (reflexive) and a successor
S ranges over the n! directed Hamiltonian paths.
"""

from __future__ import annotations

import time
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Any

from liftcount.batch import batch_execute
from liftcount.config import LiftCountSettings, get_settings
from liftcount.errors import OracleCapError, ValidationError
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
    Sentence,
    Top,
)
from liftcount.telemetry import get_logger
from liftcount.types import ONE, ZERO, factorial

logger = get_logger(__name__)

Interpretation = dict[str, list[bool]]
"""Predicate name -> truth values; unary at ``i``, binary at ``i * n + j``."""

Env = dict[str, int]
Check = Callable[[Interpretation, Env], bool]

_PREFIX_BITS = 6


@dataclass
class OracleResult:
    """Outcome of an enumeration.

    Attributes:
        value: Σ W(μ) over all models μ
        models: Number of models
        witness: Positive ground literals of the first model found
    """

    value: Any = ZERO
    models: int = 0
    witness: list[str] | None = None

    def absorb(self, other: OracleResult) -> None:
        self.value += other.value
        self.models += other.models
        if self.witness is None:
            self.witness = other.witness


def _compile(formula: Formula, n: int) -> Check:
    if isinstance(formula, Atom):
        name, args = formula.predicate, formula.args
        if len(args) == 1:
            (v,) = args
            return lambda interp, env: interp[name][env[v]]
        a, b = args
        return lambda interp, env: interp[name][env[a] * n + env[b]]
    if isinstance(formula, Top):
        return lambda interp, env: True
    if isinstance(formula, Bottom):
        return lambda interp, env: False
    if isinstance(formula, Not):
        body = _compile(formula.body, n)
        return lambda interp, env: not body(interp, env)
    if isinstance(formula, (Forall, Exists)):
        var = formula.var
        inner = _compile(formula.body, n)
        domain = range(n)
        if isinstance(formula, Forall):
            return lambda interp, env: all(inner(interp, {**env, var: d}) for d in domain)
        return lambda interp, env: any(inner(interp, {**env, var: d}) for d in domain)
    left = _compile(formula.left, n)
    right = _compile(formula.right, n)
    if isinstance(formula, And):
        return lambda interp, env: left(interp, env) and right(interp, env)
    if isinstance(formula, Or):
        return lambda interp, env: left(interp, env) or right(interp, env)
    if isinstance(formula, Implies):
        return lambda interp, env: not left(interp, env) or right(interp, env)
    if isinstance(formula, Iff):
        return lambda interp, env: left(interp, env) == right(interp, env)
    raise ValidationError(f"Cannot evaluate {type(formula).__name__}")


@dataclass
class _Plan:
    """What one enumeration needs, shared with workers."""

    sentence: Sentence
    n: int
    free: list[tuple[str, int]] = field(default_factory=list)
    """(predicate, size) of each enumerated predicate, in declaration order"""

    def fixed_order(self) -> list[bool]:
        n = self.n
        return [i <= j for i in range(n) for j in range(n)]

    def successor_relations(self) -> Iterator[list[bool] | None]:
        if self.sentence.successor is None:
            yield None
            return
        n = self.n
        for path in permutations(range(n)):
            relation = [False] * (n * n)
            for a, b in zip(path, path[1:]):
                relation[a * n + b] = True
            yield relation

    @property
    def free_bits(self) -> int:
        return sum(size for _, size in self.free)


def plan_for(sentence: Sentence, n: int) -> _Plan:
    plan = _Plan(sentence, n)
    axioms = {sentence.linear_order, sentence.successor}
    for predicate in sentence.predicates:
        if predicate.name in axioms:
            continue
        plan.free.append((predicate.name, n if predicate.arity == 1 else n * n))
    return plan


def _weight_of(interp: Interpretation, sentence: Sentence) -> Any:
    weight = ONE
    for name, values in interp.items():
        w, wbar = sentence.weight(name)
        true = sum(values)
        weight *= w**true * wbar ** (len(values) - true)
    return weight


def _literals(interp: Interpretation, sentence: Sentence, n: int) -> list[str]:
    shown: list[str] = []
    for name, values in interp.items():
        unary = sentence.predicate(name).arity == 1
        for index, value in enumerate(values):
            if not value:
                continue
            if unary:
                shown.append(f"{name}({index + 1})")
            else:
                shown.append(f"{name}({index // n + 1},{index % n + 1})")
    return shown


def _enumerate(plan: _Plan, prefix: tuple[bool, ...]) -> OracleResult:
    sentence, n = plan.sentence, plan.n
    check = _compile(sentence.formula, n)
    constraints = sentence.cardinality_constraints
    result = OracleResult()
    rest = plan.free_bits - len(prefix)
    base: Interpretation = {}
    if sentence.linear_order is not None:
        base[sentence.linear_order] = plan.fixed_order()

    for relation in plan.successor_relations():
        if relation is not None and sentence.successor is not None:
            base[sentence.successor] = relation
        for tail in product((False, True), repeat=rest):
            bits = prefix + tail
            interp = dict(base)
            offset = 0
            for name, size in plan.free:
                interp[name] = list(bits[offset : offset + size])
                offset += size
            if constraints and not all(c.holds(sum(interp[c.predicate])) for c in constraints):
                continue
            if not check(interp, {}):
                continue
            result.value += _weight_of(interp, sentence)
            result.models += 1
            if result.witness is None:
                result.witness = _literals(interp, sentence, n)
    return result


def brute_force_wfomc(
    sentence: Sentence,
    n: int,
    fixed_order: bool = False,
    *,
    settings: LiftCountSettings | None = None,
    workers: int = 1,
) -> OracleResult:
    """Σ W(μ) over all models of ``sentence`` on the domain {1..n}.

    With a linear order declared, ``fixed_order`` keeps L as the natural
    order; otherwise the sum over all n! orders is returned, which is n!
    times the fixed-order value. Without L the flag has no effect.

    Raises:
        OracleCapError: If n or the number of enumerated ground literals
            exceeds the configured caps
    """
    settings = settings or get_settings()
    if n < 1:
        raise ValidationError("Domain size must be at least 1", field="n", expected=">= 1", actual=n)
    if n > settings.oracle_max_n:
        raise OracleCapError(
            f"Oracle domain size {n} exceeds cap {settings.oracle_max_n}",
            cap="n",
            limit=settings.oracle_max_n,
            requested=n,
        ).with_hint("raise LIFTCOUNT_ORACLE_MAX_N")
    plan = plan_for(sentence, n)
    if plan.free_bits > settings.oracle_max_free_bits:
        raise OracleCapError(
            f"Oracle would enumerate {plan.free_bits} free ground literals",
            cap="free_bits",
            limit=settings.oracle_max_free_bits,
            requested=plan.free_bits,
        ).with_hint("raise LIFTCOUNT_ORACLE_MAX_FREE_BITS")

    start = time.time()
    split = min(_PREFIX_BITS, plan.free_bits) if workers > 1 else 0
    prefixes = list(product((False, True), repeat=split))
    result = OracleResult()
    for partial in batch_execute(prefixes, _enumerate, plan, workers):
        result.absorb(partial)
    if sentence.linear_order is not None and not fixed_order:
        result.value *= factorial(n)
        result.models *= factorial(n)
    logger.debug(
        "Oracle enumeration finished",
        n=n,
        free_bits=plan.free_bits,
        models=result.models,
        elapsed_s=round(time.time() - start, 4),
    )
    return result
