"""Integer coefficient sequences f(1), f(2), ... of a series F(x) with F(0) = 0."""

from __future__ import annotations

from typing import Iterable, Iterator


class IntSequence:
    """Immutable 1-indexed integer sequence.

    ``seq[n]`` is the coefficient of ``x**n``; index 0 does not exist
    because the series has no constant term.

      >>> f = IntSequence([1, 2, 3])
      >>> f[1], f[3], len(f)
      (1, 3, 3)
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        values = tuple(coeffs)
        for v in values:
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"sequence entries must be int, got {v!r}")
        self._coeffs = values

    @classmethod
    def from_series_coeffs(cls, coeffs: Iterable[int]) -> IntSequence:
        """Build from coefficients indexed from x**0; a nonzero constant is rejected."""
        values = list(coeffs)
        if not values:
            raise ValueError("empty coefficient list")
        if values[0] != 0:
            raise ValueError(f"constant term must be 0, got {values[0]}")
        return cls(values[1:])

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= len(self._coeffs):
            raise IndexError(f"index {n} outside 1..{len(self._coeffs)}")
        return self._coeffs[n - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntSequence):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"IntSequence({list(self._coeffs)!r})"

    def padded(self, length: int) -> IntSequence:
        """Extend with zero coefficients up to ``length`` (never truncates)."""
        if length <= len(self._coeffs):
            return self
        return IntSequence(self._coeffs + (0,) * (length - len(self._coeffs)))

    def require(self, n: int) -> None:
        if n > len(self._coeffs):
            raise ValueError(
                f"sequence has {len(self._coeffs)} coefficients, need {n}"
            )


def ones(length: int) -> IntSequence:
    return IntSequence([1] * length)


def fib_gf(length: int) -> IntSequence:
    """Coefficients of F(x) = x + x**2, i.e. (1, 1, 0, 0, ...); not the Fibonacci numbers."""
    return IntSequence([1, 1][:length]).padded(length)


def catalan_shift(length: int) -> IntSequence:
    """f(n) = Cat(n - 1): the Catalan series multiplied by x."""
    out = []
    c = 1
    for m in range(length):
        out.append(c)
        c = c * 2 * (2 * m + 1) // (m + 2)
    return IntSequence(out)


def primes_with_one(length: int) -> IntSequence:
    """1 followed by the primes: 1, 2, 3, 5, 7, 11, ..."""
    out = [1]
    candidate = 2
    while len(out) < length:
        if all(candidate % p for p in out[1:] if p * p <= candidate):
            out.append(candidate)
        candidate += 1
    return IntSequence(out[:length])
