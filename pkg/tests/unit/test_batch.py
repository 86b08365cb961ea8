"""Tests for batch execution."""

import pytest

from liftcount.batch import BatchExecutor, BatchResult, batch_execute


def _scale(factor: int, item: int) -> int:
    return factor * item


def _fail(context: None, item: int) -> int:
    raise ValueError(f"bad item {item}")


class TestBatchResult:
    """Tests for BatchResult."""

    def test_defaults(self) -> None:
        """Test an empty result is serial with no items."""
        result = BatchResult[int]()
        assert result.results == []
        assert not result.parallel

    def test_parallel_flag(self) -> None:
        """Test a result with several workers reports parallel."""
        assert BatchResult[int](workers=4).parallel


class TestBatchExecutor:
    """Tests for BatchExecutor."""

    def test_serial_execution(self) -> None:
        """Test a single worker keeps item order."""
        result = BatchExecutor(_scale, 3).execute([1, 2, 3])
        assert result.results == [3, 6, 9]
        assert result.workers == 1

    def test_small_batch_stays_serial(self) -> None:
        """Test batches below the threshold run in-process."""
        result = BatchExecutor(_scale, 2, max_workers=4, min_items=10).execute([1, 2])
        assert result.results == [2, 4]
        assert not result.parallel

    def test_process_pool_matches_serial(self) -> None:
        """Test pooled results equal serial results, in order."""
        items = list(range(20))
        result = BatchExecutor(_scale, 5, max_workers=2).execute(items)
        assert result.results == [5 * i for i in items]
        assert result.workers == 2

    def test_invalid_workers(self) -> None:
        """Test a worker count below one is rejected."""
        with pytest.raises(ValueError):
            BatchExecutor(_scale, 1, max_workers=0)

    def test_errors_propagate(self) -> None:
        """Test an exception in an item reaches the caller."""
        with pytest.raises(ValueError, match="bad item 1"):
            BatchExecutor(_fail, None).execute([1])

    def test_max_workers_property(self) -> None:
        """Test the max_workers property."""
        assert BatchExecutor(_scale, 1, max_workers=3).max_workers == 3


class TestBatchExecute:
    """Tests for the convenience function."""

    def test_batch_execute(self) -> None:
        """Test the functional helper keeps item order."""
        assert batch_execute(["a", "bb"], lambda ctx, s: ctx + s, ">") == [">a", ">bb"]
