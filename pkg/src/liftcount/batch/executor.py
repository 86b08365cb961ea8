"""
Batch executor for CPU-bound table and layer work.

Runs one operation over many items, serially or on a process pool. The
operation receives a shared context first; on a pool the context is pickled
once per worker rather than once per item.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Generic, TypeVar

from liftcount.telemetry import get_logger

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

C = TypeVar("C")
T = TypeVar("T")
R = TypeVar("R")

logger = get_logger(__name__)

_worker_operation: Any = None
_worker_context: Any = None


def _install(operation: Callable[[Any, Any], Any], context: Any) -> None:
    global _worker_operation, _worker_context
    _worker_operation = operation
    _worker_context = context


def _invoke(item: Any) -> Any:
    return _worker_operation(_worker_context, item)


@dataclass
class BatchResult(Generic[R]):
    """Result of a batch execution.

    Attributes:
        results: One result per item, in item order
        total_time_ms: Total execution time in milliseconds
        workers: Number of worker processes used (1 when serial)
    """

    results: list[R] = field(default_factory=list)
    total_time_ms: float = 0.0
    workers: int = 1

    @property
    def parallel(self) -> bool:
        return self.workers > 1


class BatchExecutor(Generic[C, T, R]):
    """Executes ``operation(context, item)`` for a batch of items.

    ``operation`` must be a module-level function so workers can import it.
    Batches shorter than ``min_items`` always run serially.

    Example:
        >>> executor = BatchExecutor(expand_chunk, context, max_workers=4)
        >>> result = executor.execute(chunks)
        >>> merged = merge(result.results)
    """

    def __init__(
        self,
        operation: Callable[[C, T], R],
        context: C,
        max_workers: int = 1,
        min_items: int = 2,
    ) -> None:
        """Initialize batch executor.

        Args:
            operation: Function applied to each item
            context: Shared first argument of every call
            max_workers: Maximum worker processes
            min_items: Smallest batch worth distributing
        """
        if max_workers < 1:
            raise ValueError("max_workers must be at least 1")
        self._operation = operation
        self._context = context
        self._max_workers = max_workers
        self._min_items = min_items

    def execute(self, items: Sequence[T]) -> BatchResult[R]:
        """Apply the operation to all items.

        Exceptions raised by the operation propagate unchanged.
        """
        start_time = time.time()
        workers = min(self._max_workers, len(items))
        result = BatchResult[R]()
        if workers <= 1 or len(items) < self._min_items:
            result.results = [self._operation(self._context, item) for item in items]
        else:
            with ProcessPoolExecutor(
                max_workers=workers,
                initializer=_install,
                initargs=(self._operation, self._context),
            ) as pool:
                result.results = list(pool.map(_invoke, items))
            result.workers = workers
        result.total_time_ms = (time.time() - start_time) * 1000
        if result.parallel:
            logger.debug(
                "Batch finished",
                items=len(items),
                workers=workers,
                elapsed_ms=round(result.total_time_ms, 1),
            )
        return result

    @property
    def max_workers(self) -> int:
        return self._max_workers


def batch_execute(
    items: Sequence[T],
    operation: Callable[[C, T], R],
    context: C,
    max_workers: int = 1,
    min_items: int = 2,
) -> list[R]:
    """Convenience function for batch execution.

    Returns:
        Results in item order
    """
    executor = BatchExecutor(operation, context, max_workers, min_items)
    return executor.execute(items).results
