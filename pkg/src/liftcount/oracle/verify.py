"""
Comparison of a counting algorithm against the brute-force oracle.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass
from typing import Any

from liftcount.config import LiftCountSettings
from liftcount.errors import VerificationMismatch
from liftcount.oracle.brute_force import brute_force_wfomc
from liftcount.syntax.ast import Sentence
from liftcount.telemetry import get_logger
from liftcount.types import format_rational

logger = get_logger(__name__)


@dataclass(frozen=True)
class VerificationRecord:
    """One domain size checked against the oracle."""

    n: int
    expected: Any
    actual: Any
    models: int

    @property
    def matches(self) -> bool:
        return bool(self.expected == self.actual)


def verify_sequence(
    sentence: Sentence,
    sizes: Iterable[int],
    count: Callable[[int], Any],
    fixed_order: bool = False,
    *,
    settings: LiftCountSettings | None = None,
    workers: int = 1,
) -> list[VerificationRecord]:
    """Check ``count(n)`` against the oracle for every n in ``sizes``.

    Args:
        sentence: The sentence as written, before normalization
        sizes: Domain sizes, checked in the given order
        count: Algorithm under test
        fixed_order: Passed to the oracle; ``count`` must use the same
            convention

    Returns:
        One record per size, all matching

    Raises:
        VerificationMismatch: At the first size where the values differ
        OracleCapError: If a size is beyond the oracle caps
    """
    records: list[VerificationRecord] = []
    for n in sizes:
        oracle = brute_force_wfomc(sentence, n, fixed_order, settings=settings, workers=workers)
        record = VerificationRecord(n, oracle.value, count(n), oracle.models)
        if not record.matches:
            raise VerificationMismatch(
                f"Mismatch at n={n}: oracle {format_rational(record.expected)}, "
                f"algorithm {format_rational(record.actual)}",
                n=n,
                expected=format_rational(record.expected),
                actual=format_rational(record.actual),
                witness=oracle.witness,
            )
        logger.debug("Verified", n=n, value=format_rational(record.actual), models=record.models)
        records.append(record)
    return records
