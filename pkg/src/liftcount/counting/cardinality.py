"""
Unary cardinality constraints on count vectors.
"""

from __future__ import annotations

from collections.abc import Sequence

from liftcount.cells import OneType
from liftcount.syntax.ast import CardinalityConstraint


def predicate_count(k: Sequence[int], predicate: str, cells: Sequence[OneType]) -> int:
    """Number of elements satisfying ``predicate`` under count vector ``k``."""
    return sum(count for count, cell in zip(k, cells, strict=True) if cell.is_positive(predicate))


def apply_cardinality_filter(
    k: Sequence[int],
    constraints: Sequence[CardinalityConstraint],
    cells: Sequence[OneType],
) -> bool:
    """Whether count vector ``k`` satisfies every constraint.

    ``cells[i]`` is the 1-type (or a representative of the group of 1-types)
    counted by ``k[i]``.
    """
    return all(c.holds(predicate_count(k, c.predicate, cells)) for c in constraints)
