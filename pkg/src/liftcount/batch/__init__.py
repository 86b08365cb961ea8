"""
Batch processing module for liftcount.

Distributes independent table rows and DP chunks over worker processes.
"""

from liftcount.batch.executor import BatchExecutor, BatchResult, batch_execute

__all__ = [
    "BatchExecutor",
    "BatchResult",
    "batch_execute",
]
