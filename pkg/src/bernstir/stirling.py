"""Stirling numbers of the second kind by two independent routes.

``StirlingTable`` builds the full triangle with the additive recurrence and
is the production path; ``stirling_explicit`` evaluates the alternating
binomial sum directly and serves as the cross-check.
"""

from __future__ import annotations

from typing import Iterator

from .exact import binomial, factorial


class StirlingTable:
    """Triangle of S(n, k) for 0 <= k <= n <= max_n.

    Built once from S(n, k) = k*S(n-1, k) + S(n-1, k-1) and immutable after
    construction, so concurrent reads are safe.  Conventions: S(0, 0) = 1,
    S(n, 0) = 0 for n >= 1, and S(n, k) = 0 whenever k > n.
    """

    __slots__ = ("_rows",)

    def __init__(self, max_n: int):
        if max_n < 0:
            raise ValueError("max_n must be >= 0, got %d" % max_n)
        rows = [(1,)]
        for n in range(1, max_n + 1):
            prev = rows[-1]
            row = [0]
            for k in range(1, n):
                row.append(k * prev[k] + prev[k - 1])
            row.append(1)
            rows.append(tuple(row))
        self._rows = tuple(rows)

    @property
    def max_n(self) -> int:
        return len(self._rows) - 1

    def value(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValueError("S(n, k) needs n, k >= 0, got (%d, %d)" % (n, k))
        if n > self.max_n:
            raise ValueError(
                "table covers n <= %d but S(%d, %d) was requested" % (self.max_n, n, k)
            )
        if k > n:
            return 0
        return self._rows[n][k]

    def __iter__(self) -> Iterator[tuple[int, int, int]]:
        """Yield (n, k, S(n, k)) in lexicographic (n, k) order."""
        for n, row in enumerate(self._rows):
            for k, v in enumerate(row):
                yield n, k, v


def stirling_explicit(n: int, k: int) -> int:
    """S(n, k) = (1/k!) * sum_{l=1}^{k} (-1)^(k-l) C(k, l) l^n.

    Extended to k = 0 and k > n by the triangle conventions.  The alternating
    sum is exactly divisible by k!; a failed division means the implementation
    is broken, not the input.
    """
    if n < 0 or k < 0:
        raise ValueError("S(n, k) needs n, k >= 0, got (%d, %d)" % (n, k))
    if k == 0:
        return 1 if n == 0 else 0
    if k > n:
        return 0
    total = sum((-1) ** (k - l) * binomial(k, l) * l**n for l in range(1, k + 1))
    q, r = divmod(total, factorial(k))
    if r:
        raise RuntimeError(
            "alternating sum for S(%d, %d) is not divisible by %d!" % (n, k, k)
        )
    return q
