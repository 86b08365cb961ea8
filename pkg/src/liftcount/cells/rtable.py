"""
Pair weights between 1-types.

``r_{s,t}`` sums W(π) over the 2-tables π with
``C_s(a) ∧ C_t(b) ∧ π(a,b) ⊨ psi(a,b) ∧ psi(b,a)``. In axiom mode the sum is
split by how the pair relates under L and S, with a before b in the order:

    k=1: L(a,b), ~L(b,a), ~S(a,b), ~S(b,a)
    k=2: L(a,b), ~L(b,a),  S(a,b), ~S(b,a)
    k=3: L(a,b), ~L(b,a), ~S(a,b),  S(b,a)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from liftcount.batch import batch_execute
from liftcount.cells.evaluate import compile_formula
from liftcount.cells.types import (
    OneType,
    TwoTable,
    enumerate_one_types,
    enumerate_two_tables,
    one_type_slots,
    one_type_weight,
    two_table_slots,
)
from liftcount.errors import AxiomError
from liftcount.syntax.ast import SWAP_XY, And, Atom, rename_variables
from liftcount.telemetry import get_logger
from liftcount.types import ZERO

if TYPE_CHECKING:
    from liftcount.normalize import UniversalSentence

logger = get_logger(__name__)

Matrix = tuple[tuple[Any, ...], ...]

LSO_PATTERNS: dict[int, tuple[bool, bool]] = {
    1: (False, False),
    2: (True, False),
    3: (False, True),
}
"""k -> (S(a,b), S(b,a))"""


@dataclass(frozen=True)
class RTable:
    """Pair weights of a sentence.

    Attributes:
        plain: ``plain[s][t] = r_{s,t}``, or None when not computed
        lso: ``lso[k-1][s][t] = r_{s,t,k}``, or None outside axiom mode
    """

    plain: Matrix | None = None
    lso: tuple[Matrix, Matrix, Matrix] | None = None

    def r(self, s: int, t: int) -> Any:
        if self.plain is None:
            raise ValueError("plain r-table was not computed")
        return self.plain[s][t]

    def r_k(self, s: int, t: int, k: int) -> Any:
        if self.lso is None:
            raise ValueError("axiom-mode r-table was not computed")
        return self.lso[k - 1][s][t]


class CellTable:
    """1-types, 2-tables, 1-type weights and r-tables of a normal form.

    Built once per sentence and shared across domain sizes. Tables are
    computed on first use.
    """

    def __init__(self, universal: UniversalSentence) -> None:
        self.universal = universal
        self.one_types: list[OneType] = enumerate_one_types(universal)
        self.weights = [one_type_weight(c, universal.weights) for c in self.one_types]
        self.two_table_count = 2 ** len(two_table_slots(universal))
        self._all_tables = enumerate_two_tables(universal)
        self._lso_tables: dict[int, list[TwoTable]] | None = None
        self._plain: Matrix | None = None
        self._lso: tuple[Matrix, Matrix, Matrix] | None = None

        x_slots = one_type_slots(universal)
        y_slots = tuple(Atom(a.predicate, ("y",) * len(a.args)) for a in x_slots)
        psi = universal.psi
        self._pair_check = compile_formula(
            And(psi, rename_variables(psi, SWAP_XY)),
            [*x_slots, *y_slots, *two_table_slots(universal)],
        )

    @property
    def u(self) -> int:
        return len(self.one_types)

    @property
    def axiom_mode(self) -> bool:
        return self.universal.linear_order is not None and self.universal.successor is not None

    def _sum(self, s: int, t: int, tables: list[TwoTable]) -> Any:
        prefix = self.one_types[s].bits + self.one_types[t].bits
        total = ZERO
        for table in tables:
            if self._pair_check(prefix + table.bits):
                total += table.weight(self.universal.weights)
        return total

    def r_plain(self, s: int, t: int) -> Any:
        """``r_{s,t}`` over all 2-tables."""
        return self._sum(s, t, self._all_tables)

    def tables_for(self, k: int) -> list[TwoTable]:
        """2-tables with the L and S bits of pattern ``k``."""
        if self._lso_tables is None:
            order, successor = self.universal.linear_order, self.universal.successor
            if order is None or successor is None:
                raise AxiomError(
                    "Axiom-mode pair weights need both a linear order and a successor predicate",
                    algorithm="lso",
                    axioms=self.universal.axioms,
                )
            self._lso_tables = {}
            for key, (ab, ba) in LSO_PATTERNS.items():
                fixed = {
                    Atom(order, ("x", "y")): True,
                    Atom(order, ("y", "x")): False,
                    Atom(successor, ("x", "y")): ab,
                    Atom(successor, ("y", "x")): ba,
                }
                self._lso_tables[key] = enumerate_two_tables(self.universal, fixed)
        return self._lso_tables[k]

    def r_lso(self, s: int, t: int, k: int) -> Any:
        """``r_{s,t,k}`` with a before b in the linear order."""
        if k not in LSO_PATTERNS:
            raise ValueError(f"k must be 1, 2 or 3, got {k}")
        return self._sum(s, t, self.tables_for(k))

    def _row(self, s: int, k: int | None) -> tuple[Any, ...]:
        if k is None:
            return tuple(self.r_plain(s, t) for t in range(self.u))
        return tuple(self.r_lso(s, t, k) for t in range(self.u))

    def plain_table(self, workers: int = 1) -> Matrix:
        if self._plain is None:
            if workers > 1:
                rows = batch_execute(list(range(self.u)), _plain_row, self.universal, workers)
            else:
                rows = [self._row(s, None) for s in range(self.u)]
            self._plain = tuple(rows)
            logger.debug("Computed r-table", u=self.u, two_tables=self.two_table_count)
        return self._plain

    def lso_table(self, workers: int = 1) -> tuple[Matrix, Matrix, Matrix]:
        if self._lso is None:
            self.tables_for(1)
            items = [(k, s) for k in LSO_PATTERNS for s in range(self.u)]
            if workers > 1:
                rows = batch_execute(items, _lso_row, self.universal, workers)
            else:
                rows = [self._row(s, k) for k, s in items]
            u = self.u
            self._lso = (tuple(rows[:u]), tuple(rows[u : 2 * u]), tuple(rows[2 * u :]))
            logger.debug(
                "Computed axiom-mode r-tables",
                u=u,
                two_tables=len(self.tables_for(1)),
            )
        return self._lso

    def rtable(self, *, plain: bool = True, lso: bool = False, workers: int = 1) -> RTable:
        return RTable(
            plain=self.plain_table(workers) if plain else None,
            lso=self.lso_table(workers) if lso else None,
        )


_worker_cells: CellTable | None = None


def _cells_for(universal: UniversalSentence) -> CellTable:
    global _worker_cells
    if _worker_cells is None or _worker_cells.universal is not universal:
        _worker_cells = CellTable(universal)
    return _worker_cells


def _plain_row(universal: UniversalSentence, s: int) -> tuple[Any, ...]:
    return _cells_for(universal)._row(s, None)


def _lso_row(universal: UniversalSentence, item: tuple[int, int]) -> tuple[Any, ...]:
    k, s = item
    return _cells_for(universal)._row(s, k)


def compute_r_plain(cells: CellTable, s: int, t: int) -> Any:
    return cells.r_plain(s, t)


def compute_r_lso(cells: CellTable, s: int, t: int, k: int) -> Any:
    return cells.r_lso(s, t, k)
