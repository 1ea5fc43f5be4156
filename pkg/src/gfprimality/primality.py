"""One-sided compositeness tests built on the corollary sum.

Every prime passes every test; a composite that passes is a pseudoprime for
that test.  Verdicts are therefore ``COMPOSITE`` or ``PROBABLY_PRIME`` and
never "prime".
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import partial

from .compositae import CompositaeTable, binomial, compositae_table
from .sequence import IntSequence, catalan_shift, fib_gf, ones
from .sums import divisibility_witness


class Outcome(enum.Enum):
    COMPOSITE = "composite"
    PROBABLY_PRIME = "probably-prime"


class Method(enum.Enum):
    GENERIC = "generic"
    FERMAT2 = "fermat2"
    LUCAS = "lucas"
    BINOM = "binom"


@dataclass(frozen=True)
class PrimalityVerdict:
    n: int
    outcome: Outcome
    # the non-integral corollary sum, only from the generic path
    witness: Fraction | None = None

    @property
    def composite(self) -> bool:
        return self.outcome is Outcome.COMPOSITE


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"primality tests need n >= 2, got {n}")


def _verdict(n: int, passed: bool, witness: Fraction | None = None) -> PrimalityVerdict:
    if passed:
        return PrimalityVerdict(n, Outcome.PROBABLY_PRIME)
    return PrimalityVerdict(n, Outcome.COMPOSITE, witness)


def is_prime_trial_division(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def gf_primality_test(
    f: IntSequence, n: int, *, table: CompositaeTable | None = None
) -> PrimalityVerdict:
    """Composite iff n does not divide S(n) - f(1)**n for the sequence ``f``."""
    _check_n(n)
    u, divisible = divisibility_witness(f, n, table=table)
    return _verdict(n, divisible, None if divisible else Fraction(u, n))


def fermat_base2_test(n: int) -> PrimalityVerdict:
    _check_n(n)
    return _verdict(n, pow(2, n, n) == 2 % n)


def lucas_number(n: int) -> int:
    """L(1) = 1, L(2) = 3, L(n) = L(n-1) + L(n-2)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    a, b = 1, 3
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def lucas_mod(n: int, m: int) -> int:
    """L(n) mod m by running the recurrence in residues."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    a, b = 1 % m, 3 % m
    for _ in range(n - 1):
        a, b = b, (a + b) % m
    return a


def lucas_variant_test(n: int) -> PrimalityVerdict:
    _check_n(n)
    return _verdict(n, lucas_mod(n, n) == 1 % n)


def central_binomial_test(n: int) -> PrimalityVerdict:
    _check_n(n)
    return _verdict(n, (binomial(2 * n - 1, n - 1) - 1) % n == 0)


_FAST_PATHS = {
    Method.FERMAT2: fermat_base2_test,
    Method.LUCAS: lucas_variant_test,
    Method.BINOM: central_binomial_test,
}

#: Sequences whose generic test each fast path reproduces.
DEFINING_SEQUENCES = {
    Method.FERMAT2: ones,
    Method.LUCAS: fib_gf,
    Method.BINOM: catalan_shift,
}


def run_test(method: Method | str, n: int, f: IntSequence | None = None) -> PrimalityVerdict:
    method = Method(method)
    if method is Method.GENERIC:
        if f is None:
            raise ValueError("generic method needs a sequence")
        f.require(n)
        return gf_primality_test(f, n)
    return _FAST_PATHS[method](n)


def _is_pseudoprime(method: Method, n: int) -> bool:
    return not is_prime_trial_division(n) and not _FAST_PATHS[method](n).composite


def pseudoprime_scan(
    method: Method | str,
    max_n: int,
    f: IntSequence | None = None,
    *,
    workers: int = 1,
) -> list[int]:
    """Composite n <= max_n that ``method`` reports as probably prime, ascending.

    Compositeness is decided by trial division.  ``workers > 1`` spreads the
    fast-path tests over processes; output order does not depend on it.
    """
    method = Method(method)
    if max_n < 4:
        raise ValueError(f"max_n must be at least 4, got {max_n}")
    candidates = range(2, max_n + 1)

    if method is Method.GENERIC:
        if f is None:
            raise ValueError("generic method needs a sequence")
        f.require(max_n)
        table = compositae_table(f, max_n)
        return [
            n
            for n in candidates
            if not is_prime_trial_division(n)
            and not gf_primality_test(f, n, table=table).composite
        ]

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            flags = list(pool.map(partial(_is_pseudoprime, method), candidates, chunksize=64))
    else:
        flags = [_is_pseudoprime(method, n) for n in candidates]
    return [n for n, hit in zip(candidates, flags) if hit]
