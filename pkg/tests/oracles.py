"""Brute-force combinatorial oracles.

Everything here is deliberately naive enumeration, independent of the code
paths under test, and intended for small n only (set partitions up to
n = 10 or so).
"""

from fractions import Fraction
from typing import Iterator, Sequence

Block = tuple[int, ...]
Partition = tuple[Block, ...]


def set_partitions(n: int) -> Iterator[Partition]:
    """All partitions of {0, ..., n-1}: each element joins an existing block
    or opens a new one."""

    def rec(i: int) -> Iterator[list[Block]]:
        if i == n:
            yield []
            return
        for rest in rec(i + 1):
            for j in range(len(rest)):
                yield rest[:j] + [rest[j] + (i,)] + rest[j + 1 :]
            yield rest + [(i,)]

    for part in rec(0):
        yield tuple(part)


def count_partitions_into(n: int, k: int, min_block: int = 1) -> int:
    """Partitions of an n-set into exactly k blocks, each of size >= min_block."""
    return sum(
        1
        for part in set_partitions(n)
        if len(part) == k and all(len(b) >= min_block for b in part)
    )


def bell_by_set_partitions(n: int, k: int, xs: Sequence[Fraction | int]) -> Fraction:
    """B_{n,k}(x_1, ..., x_{n-k+1}) straight from its combinatorial meaning:
    sum over partitions into k blocks of the product of x_{block size}."""
    vals = [Fraction(x) for x in xs]
    total = Fraction(0)
    for part in set_partitions(n):
        if len(part) != k:
            continue
        prod = Fraction(1)
        for block in part:
            prod *= vals[len(block) - 1]
        total += prod
    return total


def pascal_triangle(max_n: int) -> list[list[int]]:
    """Binomial coefficients by the additive rule only."""
    rows = [[1]]
    for n in range(1, max_n + 1):
        prev = rows[-1]
        rows.append(
            [1] + [prev[k - 1] + prev[k] for k in range(1, n)] + [1]
        )
    return rows


def iterated_factorial(n: int) -> int:
    """n! as a bare running product."""
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out
