"""
1-types and 2-tables as bit vectors over literal slots.

Slot order follows the predicate table: a 1-type has ``U(x)`` for each unary
and ``R(x,x)`` for each binary predicate; a 2-table has ``R(x,y), R(y,x)`` for
each binary predicate. Both enumerate in lexicographic bit order with false
before true.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from itertools import product
from typing import TYPE_CHECKING, Any

from liftcount.cells.evaluate import compile_formula
from liftcount.syntax.ast import Atom, Formula, Vocabulary, Weight, map_atoms
from liftcount.syntax.checks import render_atom
from liftcount.telemetry import get_logger
from liftcount.types import ONE

if TYPE_CHECKING:
    from liftcount.normalize import UniversalSentence

logger = get_logger(__name__)


def one_type_slots(vocabulary: Vocabulary) -> tuple[Atom, ...]:
    return tuple(Atom(p.name, ("x",) * p.arity) for p in vocabulary.predicates)


def two_table_slots(vocabulary: Vocabulary) -> tuple[Atom, ...]:
    slots: list[Atom] = []
    for predicate in vocabulary.binary_predicates:
        slots.append(Atom(predicate.name, ("x", "y")))
        slots.append(Atom(predicate.name, ("y", "x")))
    return tuple(slots)


def _literal_weight(slots: tuple[Atom, ...], bits: tuple[bool, ...], weights: Mapping[str, Weight]) -> Any:
    result = ONE
    for slot, bit in zip(slots, bits, strict=True):
        w, wbar = weights.get(slot.predicate, (ONE, ONE))
        result *= w if bit else wbar
    return result


def _render(slots: tuple[Atom, ...], bits: tuple[bool, ...]) -> str:
    return " ".join(
        render_atom(slot) if bit else f"~{render_atom(slot)}"
        for slot, bit in zip(slots, bits, strict=True)
    )


@dataclass(frozen=True)
class OneType:
    """A maximally consistent set of literals in the single variable x.

    Attributes:
        index: Position among the valid 1-types, in canonical order
        bits: Truth values of the 1-type slots
        slots: The slots, shared by all 1-types of a sentence
    """

    index: int
    bits: tuple[bool, ...]
    slots: tuple[Atom, ...]

    def assignment(self, var: str = "x") -> dict[Atom, bool]:
        """Ground the 1-type on variable ``var``."""
        return {
            Atom(slot.predicate, (var,) * len(slot.args)): bit
            for slot, bit in zip(self.slots, self.bits, strict=True)
        }

    def is_positive(self, predicate: str) -> bool:
        for slot, bit in zip(self.slots, self.bits, strict=True):
            if slot.predicate == predicate:
                return bit
        raise KeyError(predicate)

    def __str__(self) -> str:
        return _render(self.slots, self.bits)


@dataclass(frozen=True)
class TwoTable:
    """Truth values of the binary atoms between two distinct elements."""

    index: int
    bits: tuple[bool, ...]
    slots: tuple[Atom, ...]

    def assignment(self) -> dict[Atom, bool]:
        return dict(zip(self.slots, self.bits, strict=True))

    def weight(self, weights: Mapping[str, Weight]) -> Any:
        """W(π): product of literal weights over the table's slots."""
        return _literal_weight(self.slots, self.bits, weights)

    def __str__(self) -> str:
        return _render(self.slots, self.bits)


def reflexive(psi: Formula) -> Formula:
    """``psi(x,x)``: every argument replaced by x."""
    return map_atoms(psi, lambda atom: Atom(atom.predicate, ("x",) * len(atom.args)))


def enumerate_one_types(universal: UniversalSentence) -> list[OneType]:
    """Valid 1-types (``psi(x,x)`` true) of a normalized sentence, canonical order.

    An empty result is legal; every count is then 0.
    """
    slots = one_type_slots(universal)
    check = compile_formula(reflexive(universal.psi), slots)
    cells = []
    for bits in product((False, True), repeat=len(slots)):
        if check(bits):
            cells.append(OneType(len(cells), bits, slots))
    logger.debug("Enumerated 1-types", slots=len(slots), valid=len(cells))
    return cells


def enumerate_two_tables(
    vocabulary: Vocabulary, fixed: Mapping[Atom, bool] | None = None
) -> list[TwoTable]:
    """All 2-tables in canonical order.

    Args:
        vocabulary: Sentence or normal form supplying the binary predicates
        fixed: Restrict to tables agreeing with these slot values; indices
            stay those of the full enumeration
    """
    slots = two_table_slots(vocabulary)
    constraints = [(slots.index(atom), value) for atom, value in (fixed or {}).items()]
    tables = []
    for index, bits in enumerate(product((False, True), repeat=len(slots))):
        if all(bits[i] == value for i, value in constraints):
            tables.append(TwoTable(index, bits, slots))
    return tables


def one_type_weight(cell: OneType, weights: Mapping[str, Weight]) -> Any:
    """Product of w over positive and w̄ over negative slots of ``cell``."""
    return _literal_weight(cell.slots, cell.bits, weights)
