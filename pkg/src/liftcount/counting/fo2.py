"""
Closed-form WFOMC for axiom-free two-variable sentences.

    WFOMC = Σ_{|k|=n} (n choose k) Π_i W(C_i)^{k_i}
                      Π_i r_{i,i}^{k_i(k_i-1)/2} Π_{i<j} r_{i,j}^{k_i k_j}
"""

from __future__ import annotations

import time
from typing import TYPE_CHECKING, Any

from liftcount.cells import CellTable
from liftcount.counting.cardinality import apply_cardinality_filter
from liftcount.counting.compositions import compositions, multinomial
from liftcount.errors import AxiomError, ValidationError
from liftcount.telemetry import get_logger
from liftcount.types import ONE, ZERO

if TYPE_CHECKING:
    from liftcount.normalize import UniversalSentence

logger = get_logger(__name__)


def count_vector_weight(cells: CellTable, k: tuple[int, ...]) -> Any:
    """Weight of all domains whose 1-type counts are ``k``, over one labelling."""
    r = cells.plain_table()
    weight = ONE
    support = [i for i, count in enumerate(k) if count]
    for position, i in enumerate(support):
        ki = k[i]
        weight *= cells.weights[i] ** ki
        if ki > 1:
            weight *= r[i][i] ** (ki * (ki - 1) // 2)
        for j in support[position + 1 :]:
            weight *= r[i][j] ** (ki * k[j])
        if not weight:
            return ZERO
    return weight


def wfomc_fo2(
    universal: UniversalSentence,
    n: int,
    *,
    cells: CellTable | None = None,
    workers: int = 1,
) -> Any:
    """WFOMC of ``forall x forall y psi`` on a domain of size ``n``.

    Raises:
        AxiomError: If the sentence declares an axiom predicate
    """
    if universal.axioms:
        raise AxiomError(
            "The fo2 algorithm does not support axiom predicates",
            algorithm="fo2",
            axioms=universal.axioms,
        ).with_hint("use --algo lso")
    if n < 1:
        raise ValidationError("Domain size must be at least 1", field="n", expected=">= 1", actual=n)
    cells = cells or CellTable(universal)
    cells.plain_table(workers)
    start = time.time()
    constraints = universal.cardinality_constraints
    total = ZERO
    vectors = 0
    for k in compositions(n, cells.u):
        if constraints and not apply_cardinality_filter(k, constraints, cells.one_types):
            continue
        vectors += 1
        weight = count_vector_weight(cells, k)
        if weight:
            total += multinomial(n, k) * weight
    logger.debug(
        "fo2 sum finished",
        n=n,
        u=cells.u,
        count_vectors=vectors,
        elapsed_s=round(time.time() - start, 4),
    )
    return total
