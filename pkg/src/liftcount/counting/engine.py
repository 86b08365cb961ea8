"""
Counting engine: one compiled sentence, counts for many domain sizes.
"""

from __future__ import annotations

import time
from collections.abc import Iterable, Iterator
from enum import Enum
from functools import cached_property
from typing import Any

from liftcount.cells import CellTable
from liftcount.config import LiftCountSettings, get_settings
from liftcount.counting.fo2 import wfomc_fo2
from liftcount.counting.losucc import DpLayer, StateSpace, require_axioms, run_layers, wfomc_losucc
from liftcount.errors import AxiomError
from liftcount.normalize import UniversalSentence, normalize
from liftcount.oracle import brute_force_wfomc
from liftcount.syntax import Sentence, parse_sentence
from liftcount.telemetry import LogContext, get_log_context, get_logger, set_log_context
from liftcount.types import format_rational

logger = get_logger(__name__)


class Algorithm(str, Enum):
    """Counting algorithm selector."""

    AUTO = "auto"
    FO2 = "fo2"
    LSO = "lso"
    ORACLE = "oracle"


class CountingEngine:
    """Counts models of one sentence.

    The normal form, cell table and DP state space are built on first use
    and reused by every later count.

    Example:
        >>> engine = CountingEngine(parse_sentence(text))
        >>> [int(engine.count(n, fixed_order=True)) for n in range(1, 5)]
        [1, 3, 13, 75]
    """

    def __init__(
        self,
        sentence: Sentence,
        settings: LiftCountSettings | None = None,
        *,
        name: str | None = None,
        compress: bool = True,
    ) -> None:
        """Initialize the engine.

        Args:
            sentence: The sentence as written
            settings: Runtime settings; process settings when omitted
            name: Sentence name for log records
            compress: Group interchangeable 1-types in the lso DP
        """
        self.sentence = sentence
        self.settings = settings or get_settings()
        self.name = name
        self.compress = compress

    @cached_property
    def normal_form(self) -> UniversalSentence:
        return normalize(self.sentence)

    @cached_property
    def cells(self) -> CellTable:
        return CellTable(self.normal_form)

    @cached_property
    def state_space(self) -> StateSpace:
        require_axioms(self.normal_form)
        return StateSpace.build(
            self.cells,
            self.normal_form.cardinality_constraints,
            compress=self.compress,
            workers=self.settings.threads,
        )

    def resolve(self, algo: Algorithm | str = Algorithm.AUTO) -> Algorithm:
        """Concrete algorithm for ``algo`` given the declared axioms.

        Raises:
            AxiomError: If the algorithm cannot handle the declared axioms
        """
        algo = Algorithm(algo)
        axioms = self.sentence.axioms
        both = self.sentence.linear_order is not None and self.sentence.successor is not None
        if algo is Algorithm.AUTO:
            if not axioms:
                return Algorithm.FO2
            if both:
                return Algorithm.LSO
            raise AxiomError(
                "No lifted algorithm handles a single axiom predicate",
                algorithm="auto",
                axioms=axioms,
            ).with_hint("declare both '#axiom linear_order' and '#axiom successor', or use --algo oracle")
        if algo is Algorithm.FO2 and axioms:
            raise AxiomError(
                "The fo2 algorithm does not support axiom predicates",
                algorithm="fo2",
                axioms=axioms,
            ).with_hint("use --algo lso")
        if algo is Algorithm.LSO and not both:
            raise AxiomError(
                "The lso algorithm needs both a linear order and a successor predicate",
                algorithm="lso",
                axioms=axioms,
            ).with_hint("use --algo fo2")
        return algo

    def count(
        self,
        n: int,
        algo: Algorithm | str = Algorithm.AUTO,
        fixed_order: bool = False,
    ) -> Any:
        """WFOMC on a domain of size ``n``.

        ``fixed_order`` fixes the linear order to the natural one; it has no
        effect on sentences without a linear order.
        """
        resolved = self.resolve(algo)
        previous = get_log_context()
        set_log_context(
            LogContext(
                sentence=self.name or previous.sentence,
                algorithm=resolved.value,
                domain_size=n,
                extra=previous.extra,
            )
        )
        try:
            start = time.time()
            logger.info("Counting started", fixed_order=fixed_order)
            value = self._count(n, resolved, fixed_order)
            logger.info(
                "Counting finished",
                value=format_rational(value),
                elapsed_s=round(time.time() - start, 4),
            )
            return value
        finally:
            set_log_context(previous)

    def _count(self, n: int, algo: Algorithm, fixed_order: bool) -> Any:
        threads = self.settings.threads
        if algo is Algorithm.ORACLE:
            return brute_force_wfomc(
                self.sentence, n, fixed_order, settings=self.settings, workers=threads
            ).value
        if algo is Algorithm.FO2:
            return wfomc_fo2(self.normal_form, n, cells=self.cells, workers=threads)
        return wfomc_losucc(
            self.normal_form,
            n,
            fixed_order,
            space=self.state_space,
            workers=threads,
            parallel_min_states=self.settings.parallel_min_states,
        )

    def sequence(
        self,
        sizes: Iterable[int],
        algo: Algorithm | str = Algorithm.AUTO,
        fixed_order: bool = False,
    ) -> Iterator[tuple[int, Any]]:
        """Yield ``(n, count(n))`` for every size in order."""
        for n in sizes:
            yield n, self.count(n, algo, fixed_order)

    def layers(self, n: int) -> Iterator[DpLayer]:
        """DP layers m = 1..n of the lso algorithm."""
        return run_layers(
            self.state_space,
            n,
            workers=self.settings.threads,
            parallel_min_states=self.settings.parallel_min_states,
        )


def wfomc(
    sentence: str | Sentence,
    n: int,
    algo: Algorithm | str = Algorithm.AUTO,
    fixed_order: bool = False,
    *,
    settings: LiftCountSettings | None = None,
) -> Any:
    """Parse (if needed) and count in one call.

    Example:
        >>> text = "forall x. forall y. (S1(x) -> R(x,y))\\n#weight S1 3 1\\n#weight R 2 1"
        >>> format_rational(wfomc(text, 2))
        '441'
    """
    if isinstance(sentence, str):
        sentence = parse_sentence(sentence)
    return CountingEngine(sentence, settings).count(n, algo, fixed_order)
