"""Randomised property checks over seeded integer sequences."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .compositae import compositae_bruteforce, compositae_table
from .primality import is_prime_trial_division
from .sequence import IntSequence
from .series import series_log_inv_one_minus
from .sums import IntegralityError, corollary_sum, divisibility_witness, theorem2_sum

SELFCHECK_MAX_N = 40
BRUTEFORCE_CHECK_MAX_N = 12


def random_sequences(
    count: int, length: int, seed: int, lo: int = -10, hi: int = 10
) -> list[IntSequence]:
    rng = random.Random(seed)
    return [IntSequence(rng.randint(lo, hi) for _ in range(length)) for _ in range(count)]


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def run_selfcheck(trials: int, max_n: int, seed: int) -> list[CheckResult]:
    """Run every integrality and oracle-agreement property on ``trials`` sequences."""
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    if not 1 <= max_n <= SELFCHECK_MAX_N:
        raise ValueError(f"max_n must be in 1..{SELFCHECK_MAX_N}, got {max_n}")

    integral = CheckResult("theorem2-integrality")
    corollary = CheckResult("corollary-at-primes")
    witness = CheckResult("witness-consistency")
    oracle = CheckResult("dp-vs-bruteforce")
    log_series = CheckResult("log-series-vs-compositae")

    for trial, f in enumerate(random_sequences(trials, max_n, seed)):
        ctx = f"trial={trial} f={list(f)}"
        table = compositae_table(f, max_n)
        g = series_log_inv_one_minus(f, max_n)

        for n in range(1, max_n + 1):
            integral.cases += 1
            try:
                s = theorem2_sum(f, n, table=table)
            except IntegralityError as exc:
                integral.failures.append(f"{ctx} n={n}: {exc}")
                continue

            log_series.cases += 1
            if n * g[n] != s:
                log_series.failures.append(f"{ctx} n={n}: S={s} but n*g(n)={n * g[n]}")

            if n < 2:
                continue
            t = corollary_sum(f, n, table=table)
            u, divisible = divisibility_witness(f, n, table=table)
            witness.cases += 1
            if n * t != u or (t.denominator == 1) != divisible:
                witness.failures.append(f"{ctx} n={n}: T={t} U={u} divisible={divisible}")
            if is_prime_trial_division(n):
                corollary.cases += 1
                if t.denominator != 1:
                    corollary.failures.append(f"{ctx} n={n}: T={t}")

        for n in range(1, min(max_n, BRUTEFORCE_CHECK_MAX_N) + 1):
            for k in range(1, n + 1):
                oracle.cases += 1
                brute = compositae_bruteforce(f, n, k)
                if table[n, k] != brute:
                    oracle.failures.append(f"{ctx} n={n} k={k}: dp={table[n, k]} brute={brute}")

    return [integral, corollary, witness, oracle, log_series]
