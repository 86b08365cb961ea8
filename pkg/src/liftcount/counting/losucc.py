"""
WFOMC under a linear order L and a successor relation S.

Elements are added in the fixed L-order. Restricted to the first m elements,
the S-path falls apart into segments; a DP state records how many elements
of each 1-type were placed (k) and how many segments run from each head
1-type to each tail 1-type (s). Each new element either starts a segment,
extends one at its head or tail, or merges two.

States are pushed forward from layer m-1 to layer m; only one layer is kept.
A layer at m never holds more than n - m + 1 segments, since each remaining
element removes at most one.

1-types whose no-link pair weights agree (and that agree on the predicates
of cardinality constraints) share one count slot, and segment ends are keyed
by the pair weights they can still take part in. The grouped DP sums exactly
the same terms; ``compress=False`` keeps one slot per 1-type.
"""

from __future__ import annotations

import time
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Any

from liftcount.batch import batch_execute
from liftcount.cells import CellTable, OneType, RTable
from liftcount.counting.cardinality import apply_cardinality_filter
from liftcount.errors import AxiomError, ValidationError
from liftcount.syntax.ast import CardinalityConstraint
from liftcount.telemetry import get_logger
from liftcount.types import ONE, ZERO, factorial

if TYPE_CHECKING:
    from liftcount.cells.rtable import Matrix
    from liftcount.normalize import UniversalSentence

logger = get_logger(__name__)

Segments = tuple[tuple[int, int, int], ...]
"""Sorted (head, tail, count) triples with count > 0."""

State = tuple[tuple[int, ...], Segments]


class BehaviorKind(str, Enum):
    """How the new element connects to the existing segments."""

    MERGE1 = "merge1"
    MERGE2 = "merge2"
    HEAD = "head"
    TAIL = "tail"
    ONLY = "only"


@dataclass(frozen=True)
class Behavior:
    """A behavior with the 1-types of the segment ends it touches.

    merge1 links the tail of ⟨a,b⟩ to the new element and the new element to
    the head of ⟨c,d⟩ with b ≠ c; merge2 is the same with b = c.
    """

    kind: BehaviorKind
    a: int | None = None
    b: int | None = None
    c: int | None = None
    d: int | None = None

    def __post_init__(self) -> None:
        if self.kind is BehaviorKind.MERGE1 and self.b == self.c:
            raise ValueError("merge1 requires b != c")
        if self.kind is BehaviorKind.MERGE2 and self.b != self.c:
            raise ValueError("merge2 requires b == c")

    @classmethod
    def merge1(cls, a: int, b: int, c: int, d: int) -> Behavior:
        return cls(BehaviorKind.MERGE1, a, b, c, d)

    @classmethod
    def merge2(cls, a: int, b: int, d: int) -> Behavior:
        return cls(BehaviorKind.MERGE2, a, b, b, d)

    @classmethod
    def head(cls, a: int, b: int) -> Behavior:
        return cls(BehaviorKind.HEAD, a, b)

    @classmethod
    def tail(cls, a: int, b: int) -> Behavior:
        return cls(BehaviorKind.TAIL, a, b)

    @classmethod
    def only(cls) -> Behavior:
        return cls(BehaviorKind.ONLY)


def _no_link_product(r1: Matrix, tau: int, counts: Sequence[int], used: dict[int, int]) -> Any:
    """Π_s r1[s][tau]^(counts[s] - used[s]), with 0^0 = 1."""
    result = ONE
    for s, count in enumerate(counts):
        exponent = count - used.get(s, 0)
        if exponent < 0:
            raise ValueError(f"negative exponent for 1-type {s}")
        if exponent:
            result *= r1[s][tau] ** exponent
            if not result:
                return ZERO
    return result


def _link_product(
    r1: Matrix,
    r2: Matrix,
    r3: Matrix,
    tau: int,
    kbar: Sequence[int],
    *,
    tail: tuple[int, int] | None = None,
    head: tuple[int, int] | None = None,
) -> Any:
    """λ for a new element of 1-type ``tau``.

    ``tail`` is the (key, slot) of the segment tail linked to the new element
    and ``head`` the (key, slot) of the segment head it links to; every other
    earlier element contributes its no-link weight.
    """
    factor = ONE
    used: dict[int, int] = {}
    if tail is not None:
        key, slot = tail
        factor *= r2[key][tau]
        used[slot] = 1
    if head is not None:
        key, slot = head
        factor *= r3[key][tau]
        used[slot] = used.get(slot, 0) + 1
    if not factor:
        return ZERO
    return factor * _no_link_product(r1, tau, kbar, used)


def lambda_weight(behavior: Behavior, tau: int, kbar: Sequence[int], r: RTable) -> Any:
    """Product of the pair weights between the new element and all earlier ones.

    This is the form over individual 1-types; the DP evaluates the same
    product over grouped count slots.

    Args:
        behavior: How the new element of 1-type ``tau`` joins the segments
        tau: 1-type of the new element
        kbar: 1-type counts of the earlier elements
        r: Axiom-mode pair weights

    Raises:
        ValueError: If the behavior needs more elements of a 1-type than
            ``kbar`` holds
    """
    if r.lso is None:
        raise ValueError("axiom-mode r-table was not computed")
    r1, r2, r3 = r.lso
    kind = behavior.kind
    if kind is BehaviorKind.MERGE1 or kind is BehaviorKind.MERGE2:
        assert behavior.b is not None and behavior.c is not None
        return _link_product(
            r1, r2, r3, tau, kbar, tail=(behavior.b, behavior.b), head=(behavior.c, behavior.c)
        )
    if kind is BehaviorKind.HEAD:
        assert behavior.a is not None
        return _link_product(r1, r2, r3, tau, kbar, head=(behavior.a, behavior.a))
    if kind is BehaviorKind.TAIL:
        assert behavior.b is not None
        return _link_product(r1, r2, r3, tau, kbar, tail=(behavior.b, behavior.b))
    return _link_product(r1, r2, r3, tau, kbar)


def _group(keys: Sequence[Any]) -> tuple[tuple[int, ...], list[int]]:
    """Number keys by first appearance; return ids and a representative per id."""
    ids: dict[Any, int] = {}
    representatives: list[int] = []
    for index, key in enumerate(keys):
        if key not in ids:
            ids[key] = len(ids)
            representatives.append(index)
    return tuple(ids[key] for key in keys), representatives


def _linked_types(weights: Sequence[Any], r2: Matrix, r3: Matrix) -> tuple[bool, ...]:
    """1-types that can have an S-neighbour with nonzero pair weight.

    On a domain of two or more elements every element has an S-neighbour.
    A 1-type with zero weight, or whose S-link weights to every remaining
    1-type are zero, adds only zero terms; removing it can strand others, so
    the check runs to a fixed point.
    """
    live = {t for t, weight in enumerate(weights) if weight}
    changed = True
    while changed:
        changed = False
        for s in sorted(live):
            if not any(r2[s][t] or r3[s][t] or r2[t][s] or r3[t][s] for t in live):
                live.discard(s)
                changed = True
    return tuple(t in live for t in range(len(weights)))


@dataclass(frozen=True)
class StateSpace:
    """Indexing of DP states and the pair weights they are evaluated with.

    Attributes:
        weights: W(C_τ) per 1-type
        class_of: Count slot of each 1-type
        head_of: Segment-head key of each 1-type
        tail_of: Segment-tail key of each 1-type
        head_class: Count slot behind each head key
        tail_class: Count slot behind each tail key
        r1: ``r1[slot][tau]``, no S-link
        r2: ``r2[tail key][tau]``, S from the earlier element to tau
        r3: ``r3[head key][tau]``, S from tau to the earlier element
        representatives: One 1-type per count slot
        linked: Whether each 1-type can take part in an S-link of nonzero
            weight; the others only occur on a one-element domain
    """

    weights: tuple[Any, ...]
    class_of: tuple[int, ...]
    head_of: tuple[int, ...]
    tail_of: tuple[int, ...]
    head_class: tuple[int, ...]
    tail_class: tuple[int, ...]
    r1: Matrix
    r2: Matrix
    r3: Matrix
    representatives: tuple[OneType, ...]
    linked: tuple[bool, ...]

    @property
    def u(self) -> int:
        return len(self.weights)

    @property
    def slots(self) -> int:
        return len(self.representatives)

    @property
    def linked_count(self) -> int:
        return sum(self.linked)

    @classmethod
    def build(
        cls,
        cells: CellTable,
        constraints: Sequence[CardinalityConstraint] = (),
        *,
        compress: bool = True,
        workers: int = 1,
    ) -> StateSpace:
        r1, r2, r3 = cells.lso_table(workers)
        u = cells.u
        if compress:
            counted = sorted({c.predicate for c in constraints})
            class_keys = [
                (r1[t], tuple(cells.one_types[t].is_positive(p) for p in counted))
                for t in range(u)
            ]
        else:
            class_keys = list(range(u))
        class_of, class_reps = _group(class_keys)
        head_keys = [(r3[t], class_of[t]) if compress else t for t in range(u)]
        tail_keys = [(r2[t], class_of[t]) if compress else t for t in range(u)]
        head_of, head_reps = _group(head_keys)
        tail_of, tail_reps = _group(tail_keys)
        return cls(
            weights=tuple(cells.weights),
            class_of=class_of,
            head_of=head_of,
            tail_of=tail_of,
            head_class=tuple(class_of[t] for t in head_reps),
            tail_class=tuple(class_of[t] for t in tail_reps),
            r1=tuple(r1[t] for t in class_reps),
            r2=tuple(r2[t] for t in tail_reps),
            r3=tuple(r3[t] for t in head_reps),
            representatives=tuple(cells.one_types[t] for t in class_reps),
            linked=_linked_types(cells.weights, r2, r3),
        )


@dataclass
class DpLayer:
    """h(m, k, s) for every reachable state of prefix length m."""

    m: int
    table: dict[State, Any] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.table)

    def states(self) -> Iterator[tuple[State, Any]]:
        """States in canonical (sorted) order."""
        for key in sorted(self.table):
            yield key, self.table[key]

    def by_segment_count(self) -> dict[int, Any]:
        """Σ h over states grouped by the number of segments."""
        totals: dict[int, Any] = {}
        for (_, segments), value in self.table.items():
            g = segment_count(segments)
            totals[g] = totals.get(g, ZERO) + value
        return totals


def segment_count(segments: Segments) -> int:
    return sum(count for _, _, count in segments)


def _canonical(segments: dict[tuple[int, int], int]) -> Segments:
    return tuple(sorted((h, t, c) for (h, t), c in segments.items() if c))


def init_layer(space: StateSpace, *, linked_only: bool = False) -> DpLayer:
    """Layer m=1: one state per valid 1-type, valued W(C_τ).

    ``linked_only`` leaves out the 1-types that cannot take an S-link, which
    contribute nothing once the domain has a second element.
    """
    layer = DpLayer(1)
    for tau, weight in enumerate(space.weights):
        if not weight or (linked_only and not space.linked[tau]):
            continue
        counts = [0] * space.slots
        counts[space.class_of[tau]] = 1
        key = (tuple(counts), ((space.head_of[tau], space.tail_of[tau], 1),))
        layer.table[key] = layer.table.get(key, ZERO) + weight
    return layer


def _expand(
    space: StateSpace, items: Sequence[tuple[State, Any]], m: int, n: int
) -> dict[State, Any]:
    """Push ``items`` of layer m-1 forward to layer m."""
    out: dict[State, Any] = {}
    limit = n - m + 1
    r1, r2, r3 = space.r1, space.r2, space.r3

    def add(counts: tuple[int, ...], segments: dict[tuple[int, int], int], value: Any) -> None:
        key = (counts, _canonical(segments))
        out[key] = out.get(key, ZERO) + value

    for (kbar, segs), value in items:
        g = segment_count(segs)
        current = {(h, t): c for h, t, c in segs}
        pairs = list(current.items())
        for tau, weight in enumerate(space.weights):
            if not weight or not space.linked[tau]:
                continue
            slot, new_head, new_tail = space.class_of[tau], space.head_of[tau], space.tail_of[tau]
            counts = list(kbar)
            counts[slot] += 1
            k = tuple(counts)
            base = value * weight

            if g + 1 <= limit:
                lam = _link_product(r1, r2, r3, tau, kbar)
                if lam:
                    segments = dict(current)
                    segments[(new_head, new_tail)] = segments.get((new_head, new_tail), 0) + 1
                    add(k, segments, base * lam)

            if g <= limit:
                for (h, t), eta in pairs:
                    lam = _link_product(r1, r2, r3, tau, kbar, head=(h, space.head_class[h]))
                    if lam:
                        segments = dict(current)
                        segments[(h, t)] -= 1
                        segments[(new_head, t)] = segments.get((new_head, t), 0) + 1
                        add(k, segments, base * eta * lam)
                    lam = _link_product(r1, r2, r3, tau, kbar, tail=(t, space.tail_class[t]))
                    if lam:
                        segments = dict(current)
                        segments[(h, t)] -= 1
                        segments[(h, new_tail)] = segments.get((h, new_tail), 0) + 1
                        add(k, segments, base * eta * lam)

            if g >= 2 and g - 1 <= limit:
                for i, (first, first_count) in enumerate(pairs):
                    tail = first[1]
                    if not r2[tail][tau]:
                        continue
                    for j, (second, second_count) in enumerate(pairs):
                        eta = first_count * (first_count - 1) if i == j else first_count * second_count
                        if not eta:
                            continue
                        head = second[0]
                        lam = _link_product(
                            r1,
                            r2,
                            r3,
                            tau,
                            kbar,
                            tail=(tail, space.tail_class[tail]),
                            head=(head, space.head_class[head]),
                        )
                        if not lam:
                            continue
                        segments = dict(current)
                        segments[first] -= 1
                        segments[second] -= 1
                        merged = (first[0], second[1])
                        segments[merged] = segments.get(merged, 0) + 1
                        add(k, segments, base * eta * lam)
    return out


def _expand_chunk(context: tuple[StateSpace, int, int], items: list[tuple[State, Any]]) -> dict[State, Any]:
    space, m, n = context
    return _expand(space, items, m, n)


def dp_step(
    layer: DpLayer,
    m: int,
    n: int,
    space: StateSpace,
    *,
    workers: int = 1,
    parallel_min_states: int = 2048,
) -> DpLayer:
    """Build layer m from layer m-1.

    With ``workers > 1`` and at least ``parallel_min_states`` predecessor
    states, chunks of states are expanded in worker processes and merged in
    chunk order; the result equals the serial one.
    """
    if not 2 <= m <= n:
        raise ValueError(f"layer {m} outside 2..{n}")
    if layer.m != m - 1:
        raise ValueError(f"expected layer {m - 1}, got {layer.m}")
    items = list(layer.table.items())
    if workers > 1 and len(items) >= parallel_min_states:
        size = -(-len(items) // (workers * 4))
        chunks = [items[i : i + size] for i in range(0, len(items), size)]
        partials = batch_execute(chunks, _expand_chunk, (space, m, n), workers)
        merged: dict[State, Any] = {}
        for partial in partials:
            for key, value in partial.items():
                merged[key] = merged.get(key, ZERO) + value
    else:
        merged = _expand(space, items, m, n)
    table = {key: value for key, value in merged.items() if value}
    logger.debug(
        "DP layer built",
        m=m,
        predecessors=len(items),
        states=len(table),
        dropped=len(merged) - len(table),
    )
    return DpLayer(m, table)


def run_layers(
    space: StateSpace,
    n: int,
    *,
    workers: int = 1,
    parallel_min_states: int = 2048,
) -> Iterator[DpLayer]:
    """Yield layers m = 1..n of the DP for domain size n."""
    if n < 1:
        raise ValidationError("Domain size must be at least 1", field="n", expected=">= 1", actual=n)
    layer = init_layer(space, linked_only=n > 1)
    yield layer
    for m in range(2, n + 1):
        layer = dp_step(
            layer, m, n, space, workers=workers, parallel_min_states=parallel_min_states
        )
        yield layer


def gamma(
    layer: DpLayer,
    space: StateSpace,
    constraints: Sequence[CardinalityConstraint] = (),
) -> Any:
    """Σ h over single-segment states whose counts pass the constraints."""
    total = ZERO
    for (counts, segments), value in layer.table.items():
        if segment_count(segments) != 1:
            continue
        if constraints and not apply_cardinality_filter(counts, constraints, space.representatives):
            continue
        total += value
    return total


def require_axioms(universal: UniversalSentence) -> None:
    if universal.linear_order is None or universal.successor is None:
        raise AxiomError(
            "The lso algorithm needs both a linear order and a successor predicate",
            algorithm="lso",
            axioms=universal.axioms,
        ).with_hint("declare '#axiom linear_order L' and '#axiom successor S', or use --algo fo2")


def wfomc_losucc(
    universal: UniversalSentence,
    n: int,
    fixed_order: bool = False,
    *,
    cells: CellTable | None = None,
    space: StateSpace | None = None,
    workers: int = 1,
    parallel_min_states: int = 2048,
    compress: bool = True,
) -> Any:
    """WFOMC of ``psi ∧ L is a linear order ∧ S is a successor relation``.

    Returns γ, the count with L fixed to the natural order, when
    ``fixed_order`` is set, and ``n! · γ`` otherwise.

    Raises:
        AxiomError: If either axiom predicate is missing
    """
    require_axioms(universal)
    if space is None:
        cells = cells or CellTable(universal)
        space = StateSpace.build(
            cells, universal.cardinality_constraints, compress=compress, workers=workers
        )
    start = time.time()
    largest = 0
    final = DpLayer(0)
    for final in run_layers(space, n, workers=workers, parallel_min_states=parallel_min_states):
        largest = max(largest, len(final))
    result = gamma(final, space, universal.cardinality_constraints)
    logger.debug(
        "lso DP finished",
        n=n,
        u=space.u,
        linked=space.linked_count,
        count_slots=space.slots,
        largest_layer=largest,
        elapsed_s=round(time.time() - start, 4),
    )
    return result if fixed_order else factorial(n) * result
