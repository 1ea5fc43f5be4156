"""Exact evaluation of the logarithmic-superposition sums.

With g(n) = sum_{k=1..n} F^D(n, k) / k the coefficients of ln(1/(1 - F)):

* ``S(n) = n g(n)`` is an integer for every integer sequence f;
* ``T(n) = sum_{k=1..n-1} F^D(n, k) / k`` is an integer whenever n is prime;
* ``U(n) = S(n) - f(1)**n = n T(n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .compositae import CompositaeTable, compositae_table
from .sequence import IntSequence


class IntegralityError(AssertionError):
    """S(n) came out non-integral. Always an implementation bug, never bad input."""


@dataclass(frozen=True)
class TheoremSumReport:
    n: int
    s: int
    t: Fraction
    u: int

    def __post_init__(self):
        if self.n * self.t != self.u:
            raise ValueError(f"inconsistent report: {self.n} * {self.t} != {self.u}")

    @property
    def t_is_integer(self) -> bool:
        return self.t.denominator == 1


def _table(f: IntSequence, n: int, table: CompositaeTable | None) -> CompositaeTable:
    if table is not None and table.max_n >= n:
        return table
    return compositae_table(f, n)


def theorem2_sum(f: IntSequence, n: int, *, table: CompositaeTable | None = None) -> int:
    """S(n) = n * sum_k F^D(n, k) / k.

    Accumulated as one reduced rational and checked for integrality before
    returning.  Pass a precomputed ``table`` (built from ``f``) to avoid
    rebuilding the compositae triangle.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    row = _table(f, n, table).row(n)
    total = n * sum((Fraction(c, k) for k, c in enumerate(row, start=1)), Fraction(0))
    if total.denominator != 1:
        raise IntegralityError(f"S({n}) = {total} is not an integer")
    return total.numerator


def corollary_sum(f: IntSequence, n: int, *, table: CompositaeTable | None = None) -> Fraction:
    """T(n) = sum_{k=1..n-1} F^D(n, k) / k as a reduced fraction."""
    if n < 2:
        raise ValueError(f"corollary sum needs n >= 2, got {n}")
    row = _table(f, n, table).row(n)
    return sum((Fraction(c, k) for k, c in enumerate(row[:-1], start=1)), Fraction(0))


def divisibility_witness(
    f: IntSequence, n: int, *, table: CompositaeTable | None = None
) -> tuple[int, bool]:
    """Return ``(U(n), n divides U(n))`` using integer arithmetic after S(n)."""
    if n < 2:
        raise ValueError(f"divisibility test needs n >= 2, got {n}")
    u = theorem2_sum(f, n, table=table) - f[1] ** n
    return u, u % n == 0


def theorem_report(
    f: IntSequence, n: int, *, table: CompositaeTable | None = None
) -> TheoremSumReport:
    s = theorem2_sum(f, n, table=table)
    u = s - f[1] ** n
    return TheoremSumReport(n=n, s=s, t=Fraction(u, n), u=u)


def theorem_reports(f: IntSequence, max_n: int) -> list[TheoremSumReport]:
    """Reports for n = 1..max_n sharing a single compositae table."""
    table = compositae_table(f, max_n)
    return [theorem_report(f, n, table=table) for n in range(1, max_n + 1)]
