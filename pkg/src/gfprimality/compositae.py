"""Compositae of a power series.

For F(x) = sum_{n>=1} f(n) x**n the compositae F^D(n, k) is the sum of
f(l_1) f(l_2) ... f(l_k) over all compositions l_1 + ... + l_k = n into
positive parts, i.e. the coefficient of x**n in F(x)**k.
"""

from __future__ import annotations

import math
from typing import Iterator, Sequence

from .sequence import IntSequence
from .series import TruncatedSeries

#: Largest n accepted by the brute-force enumerator (2**(n-1) compositions).
BRUTEFORCE_MAX_N = 16


def binomial(n: int, k: int) -> int:
    """Exact C(n, k); zero when k < 0 or k > n.

      >>> binomial(17, 8)
      24310
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    c = 1
    for i in range(1, k + 1):
        # c * (n - k + i) is divisible by i at every step
        c = c * (n - k + i) // i
    return c


class CompositaeTable:
    """Triangle of F^D(n, k) for 1 <= k <= n <= max_n. Immutable."""

    __slots__ = ("_rows", "_max_n")

    def __init__(self, rows: Sequence[Sequence[int]]):
        for n, row in enumerate(rows, start=1):
            if len(row) != n:
                raise ValueError(f"row {n} has {len(row)} entries")
        self._rows = tuple(tuple(r) for r in rows)
        self._max_n = len(self._rows)

    @property
    def max_n(self) -> int:
        return self._max_n

    def row(self, n: int) -> tuple[int, ...]:
        """Entries F^D(n, 1), ..., F^D(n, n)."""
        if not 1 <= n <= self._max_n:
            raise IndexError(f"row {n} outside 1..{self._max_n}")
        return self._rows[n - 1]

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        if not 1 <= k <= n:
            raise IndexError(f"({n}, {k}) outside the triangle")
        return self.row(n)[k - 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CompositaeTable):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"CompositaeTable(max_n={self._max_n})"


def compositae_table(f: IntSequence, max_n: int) -> CompositaeTable:
    """Fill the triangle with F^D(n, k) = sum_m f(m) F^D(n-m, k-1).

    Columns are filled by increasing k, each column by increasing n.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be positive, got {max_n}")
    f.require(max_n)
    fv = (0,) + f.coeffs[:max_n]
    # cols[k][n] = F^D(n, k); entries with n < k stay 0
    cols = [[0] * (max_n + 1) for _ in range(max_n + 1)]
    for n in range(1, max_n + 1):
        cols[1][n] = fv[n]
    for k in range(2, max_n + 1):
        prev, cur = cols[k - 1], cols[k]
        for n in range(k, max_n + 1):
            cur[n] = sum(fv[m] * prev[n - m] for m in range(1, n - k + 2))
    return CompositaeTable(
        [[cols[k][n] for k in range(1, n + 1)] for n in range(1, max_n + 1)]
    )


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Compositions of n into k positive parts in colexicographic order.

    Uses an explicit stack; parts are assigned from the last one backwards
    so the last part varies slowest.

      >>> list(compositions(4, 2))
      [(3, 1), (2, 2), (1, 3)]
    """
    if k < 1 or n < k:
        return
    # (parts assigned so far, from the right; remaining sum)
    stack: list[tuple[tuple[int, ...], int]] = [((), n)]
    while stack:
        suffix, rest = stack.pop()
        slots = k - len(suffix)
        if slots == 1:
            yield (rest,) + suffix
            continue
        # leave at least one for each of the other slots; push largest first
        for part in range(rest - slots + 1, 0, -1):
            stack.append(((part,) + suffix, rest - part))


def compositae_bruteforce(f: IntSequence, n: int, k: int) -> int:
    """F^D(n, k) by direct enumeration of all C(n-1, k-1) compositions."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    if n > BRUTEFORCE_MAX_N:
        raise ValueError(f"n={n} exceeds enumeration guard {BRUTEFORCE_MAX_N}")
    f.require(n)
    return sum(math.prod(f[p] for p in parts) for parts in compositions(n, k))


def compositae_all_ones(n: int, k: int) -> int:
    """Compositae of x/(1-x): the number of compositions of n into k parts."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return binomial(n - 1, k - 1)


def compositae_fib(n: int, k: int) -> int:
    """Compositae of x + x**2: C(k, n-k)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return binomial(k, n - k)


def compositae_catalan(n: int, k: int) -> int:
    """Compositae of x*C(x) with C the Catalan series: (k/n) C(2n-k-1, n-1)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    q, r = divmod(k * binomial(2 * n - k - 1, n - 1), n)
    if r:
        raise AssertionError(f"inexact Catalan compositae at n={n}, k={k}")
    return q


def superpose(r: Sequence[int], f: IntSequence, order: int) -> TruncatedSeries:
    """Coefficients of R(F(x)): g(0) = r(0), g(n) = sum_k F^D(n, k) r(k).

    ``r`` is indexed from 0 and needs at least ``order + 1`` entries.
    """
    if len(r) < order + 1:
        raise ValueError(f"r has {len(r)} coefficients, need {order + 1}")
    g = [r[0]]
    if order >= 1:
        table = compositae_table(f, order)
        for n in range(1, order + 1):
            g.append(sum(c * r[k] for k, c in enumerate(table.row(n), start=1)))
    return TruncatedSeries(order, g)
