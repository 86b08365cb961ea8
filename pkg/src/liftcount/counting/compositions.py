"""
Count vectors: compositions of n into u parts and multinomial coefficients.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from math import factorial, prod

CountVector = tuple[int, ...]


def compositions(n: int, parts: int) -> Iterator[CountVector]:
    """All vectors of ``parts`` naturals summing to ``n``, in colex order.

    Colex compares the last coordinate first, so ``(n, 0, ..., 0)`` comes
    first and ``(0, ..., 0, n)`` last. Zero parts yield the empty vector
    only when ``n == 0``.
    """
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        yield (n,)
        return
    for last in range(n + 1):
        for head in compositions(n - last, parts - 1):
            yield (*head, last)


def multinomial(n: int, k: Sequence[int]) -> int:
    """``n! / (k_1! ... k_u!)``; requires ``sum(k) == n``."""
    if sum(k) != n:
        raise ValueError(f"parts {tuple(k)} do not sum to {n}")
    return factorial(n) // prod(factorial(part) for part in k)
