"""Truncated formal power series with exact rational coefficients.

Every series carries an explicit truncation order ``N`` and exactly ``N + 1``
coefficients.  Binary operations require equal orders; there is no silent
padding or re-truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .sequence import IntSequence


class OrderMismatchError(ValueError):
    """Two series with different truncation orders were combined."""


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    coeffs: tuple[Fraction, ...]

    def __init__(self, order: int, coeffs: Iterable[int | Fraction]):
        values = tuple(Fraction(c) for c in coeffs)
        if order < 0:
            raise ValueError(f"order must be non-negative, got {order}")
        if len(values) != order + 1:
            raise ValueError(
                f"order {order} needs {order + 1} coefficients, got {len(values)}"
            )
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", values)

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls(order, [0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls(order, [1] + [0] * order)

    @classmethod
    def from_sequence(cls, f: IntSequence, order: int) -> TruncatedSeries:
        """F(x) = sum f(n) x**n, truncated at ``order``."""
        f.require(order)
        return cls(order, [0] + [f[n] for n in range(1, order + 1)])

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_add(self, other)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_add(self, series_scale(other, -1))

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise OrderMismatchError(f"order {a.order} != order {b.order}")


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_orders(a, b)
    return TruncatedSeries(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])


def series_scale(a: TruncatedSeries, c: int | Fraction) -> TruncatedSeries:
    return TruncatedSeries(a.order, [c * x for x in a.coeffs])


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated at the common order."""
    _check_orders(a, b)
    n = a.order
    out = []
    for i in range(n + 1):
        out.append(sum((a.coeffs[j] * b.coeffs[i - j] for j in range(i + 1)), Fraction(0)))
    return TruncatedSeries(n, out)


def series_derivative(a: TruncatedSeries) -> TruncatedSeries:
    """Term-wise derivative. The result has order ``a.order - 1``; see :func:`series_pad`."""
    if a.order < 1:
        raise ValueError("derivative needs order >= 1")
    return TruncatedSeries(a.order - 1, [n * a.coeffs[n] for n in range(1, a.order + 1)])


def series_pad(a: TruncatedSeries, order: int) -> TruncatedSeries:
    """Raise the truncation order by appending zero coefficients."""
    if order < a.order:
        raise ValueError(f"cannot pad order {a.order} down to {order}")
    return TruncatedSeries(order, a.coeffs + (Fraction(0),) * (order - a.order))


def series_truncate(a: TruncatedSeries, order: int) -> TruncatedSeries:
    if order > a.order:
        raise ValueError(f"cannot truncate order {a.order} up to {order}")
    return TruncatedSeries(order, a.coeffs[: order + 1])


def series_reciprocal_one_minus(f: IntSequence, order: int) -> TruncatedSeries:
    """H(x) = 1 / (1 - F(x)) via h(0) = 1, h(n) = sum_{m=1..n} f(m) h(n-m).

    Integer arithmetic throughout; the coefficients are integers for any
    integer ``f``.
    """
    f.require(order)
    h = [1]
    for n in range(1, order + 1):
        h.append(sum(f[m] * h[n - m] for m in range(1, n + 1)))
    return TruncatedSeries(order, h)


def series_log_inv_one_minus(f: IntSequence, order: int) -> TruncatedSeries:
    """G(x) = ln(1 / (1 - F(x))) with g(0) = 0.

    Uses G' = F' + G' F, so ``a(n) = n g(n)`` obeys the integer recurrence
    ``a(n) = n f(n) + sum_{m=1..n-1} a(m) f(n-m)``; each ``g(n) = a(n) / n``.
    This route never touches the compositae, which keeps it usable as a
    cross-check against the compositae sums.
    """
    f.require(order)
    a = [0]
    for n in range(1, order + 1):
        a.append(n * f[n] + sum(a[m] * f[n - m] for m in range(1, n)))
    return TruncatedSeries(order, [0] + [Fraction(a[n], n) for n in range(1, order + 1)])
