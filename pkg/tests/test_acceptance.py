"""Exit criteria. All arithmetic is exact, so every comparison is equality."""

import json
import subprocess
import sys

from gfprimality import (
    IntSequence,
    binomial,
    catalan_shift,
    central_binomial_test,
    compositae_bruteforce,
    compositae_table,
    corollary_sum,
    fermat_base2_test,
    fib_gf,
    gf_primality_test,
    lucas_number,
    lucas_variant_test,
    ones,
    primes_with_one,
    pseudoprime_scan,
    series_log_inv_one_minus,
    theorem2_sum,
)
from gfprimality.checks import random_sequences

from oracles import (
    FERMAT2_PSEUDOPRIMES_1000,
    LUCAS_PSEUDOPRIMES_1000,
    fermat_passes,
    is_prime_naive,
    lucas_mod_passes,
)

LUCAS_17 = [1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199, 322, 521, 843, 1364, 2207, 3571]
CENTRAL_BINOM_10 = [1, 3, 10, 35, 126, 462, 1716, 6435, 24310, 92378]
SEED = 20261017


def test_c01_example1_value(criterion):
    with criterion(1, "theorem2_sum((1,2,3,5,7,11), 6) == 380", budget=0.1):
        assert theorem2_sum(IntSequence([1, 2, 3, 5, 7, 11]), 6) == 380


def test_c02_all_ones_identity(criterion):
    with criterion(2, "theorem2_sum(ones, n) == 2^n - 1 for n = 1..30", budget=5):
        f = ones(30)
        for n in range(1, 31):
            assert theorem2_sum(f, n) == 2**n - 1


def test_c03_lucas_sequence(criterion):
    with criterion(3, "n*g(n) for x + x^2 is the Lucas list, n = 1..17"):
        g = series_log_inv_one_minus(fib_gf(17), 17)
        got = [n * g[n] for n in range(1, 18)]
        assert got == LUCAS_17
        assert got == [lucas_number(n) for n in range(1, 18)]


def test_c04_catalan_sequence(criterion):
    with criterion(4, "n*g(n) for the Catalan shift is C(2n-1, n-1), n = 1..10"):
        g = series_log_inv_one_minus(catalan_shift(10), 10)
        got = [n * g[n] for n in range(1, 11)]
        assert got == CENTRAL_BINOM_10
        assert got == [binomial(2 * n - 1, n - 1) for n in range(1, 11)]


def test_c05_theorem2_property(criterion):
    with criterion(5, "S(n) integral for 200 random sequences, n <= 40", budget=60):
        failures = 0
        for f in random_sequences(200, 40, SEED):
            table = compositae_table(f, 40)
            for n in range(1, 41):
                # theorem2_sum raises IntegralityError on a non-integral sum
                s = theorem2_sum(f, n, table=table)
                failures += not isinstance(s, int)
        assert failures == 0


def test_c06_corollary_property(criterion):
    with criterion(6, "T(p) integral for primes p <= 40; no prime p <= 200 declared composite"):
        primes40 = [p for p in range(2, 41) if is_prime_naive(p)]
        for f in random_sequences(200, 40, SEED):
            table = compositae_table(f, 40)
            for p in primes40:
                assert corollary_sum(f, p, table=table).denominator == 1, (list(f), p)

        primes200 = [p for p in range(2, 201) if is_prime_naive(p)]
        for make in (ones, fib_gf, catalan_shift, primes_with_one):
            f = make(200)
            table = compositae_table(f, 200)
            for p in primes200:
                assert not gf_primality_test(f, p, table=table).composite, (make.__name__, p)
        for test in (fermat_base2_test, lucas_variant_test, central_binomial_test):
            for p in primes200:
                assert not test(p).composite, (test.__name__, p)


def test_c07_oracle_equivalence(criterion):
    with criterion(7, "DP compositae == brute force, 1 <= k <= n <= 12, 50 sequences", budget=30):
        for f in random_sequences(50, 12, SEED, lo=-5, hi=5):
            table = compositae_table(f, 12)
            for n in range(1, 13):
                for k in range(1, n + 1):
                    assert table[n, k] == compositae_bruteforce(f, n, k)


def test_c08_pseudoprimes(criterion):
    with criterion(8, "scan(fermat2, 1000)[0] == 341 and scan(lucas, 1000)[0] == 705", budget=10):
        composites = [n for n in range(4, 1001) if not is_prime_naive(n)]
        assert [n for n in composites if fermat_passes(n)] == FERMAT2_PSEUDOPRIMES_1000
        assert [n for n in composites if lucas_mod_passes(n)] == LUCAS_PSEUDOPRIMES_1000

        fermat = pseudoprime_scan("fermat2", 1000)
        lucas = pseudoprime_scan("lucas", 1000)
        assert fermat == FERMAT2_PSEUDOPRIMES_1000 and fermat[0] == 341
        assert lucas == LUCAS_PSEUDOPRIMES_1000 and lucas[0] == 705


def test_c09_fast_path_agreement(criterion):
    with criterion(9, "fast paths agree with the generic test, 2 <= n <= 100", budget=60):
        pairs = [
            (fermat_base2_test, ones(100)),
            (lucas_variant_test, fib_gf(100)),
            (central_binomial_test, catalan_shift(100)),
        ]
        for fast, f in pairs:
            table = compositae_table(f, 100)
            for n in range(2, 101):
                assert fast(n).outcome is gf_primality_test(f, n, table=table).outcome, (fast.__name__, n)


def _cli(*argv):
    return subprocess.run(
        [sys.executable, "-m", "gfprimality", *argv], capture_output=True, check=False
    )


def test_c10_cli_contract(criterion):
    with criterion(10, "CLI reproduces criteria 1-4 and 8 with stable exit codes"):
        r = _cli("logsum", "--seq", "primes1", "--n", "6")
        assert r.returncode == 0
        assert r.stdout.decode().splitlines()[-1].split("\t")[1] == "380"

        r = _cli("logsum", "--seq", "ones", "--n", "30", "--json")
        assert r.returncode == 0
        rows = json.loads(r.stdout)
        assert [int(x["S"]) for x in rows] == [2**m - 1 for m in range(1, 31)]

        r = _cli("logsum", "--seq", "fib-gf", "--n", "17", "--json")
        assert [int(x["S"]) for x in json.loads(r.stdout)] == LUCAS_17

        r = _cli("logsum", "--seq", "catalan", "--n", "10", "--json")
        assert [int(x["S"]) for x in json.loads(r.stdout)] == CENTRAL_BINOM_10

        r = _cli("compositae", "--seq", "primes1", "--n", "6", "--json")
        assert json.loads(r.stdout)["rows"][5][1] == "43"

        r = _cli("scan", "--method", "fermat2", "--max", "1000")
        assert r.returncode == 0 and r.stdout.decode().splitlines()[0] == "341"
        r = _cli("scan", "--method", "lucas", "--max", "1000")
        assert r.returncode == 0 and r.stdout.decode().splitlines()[0] == "705"

        assert _cli("test", "--method", "lucas", "11").returncode == 0
        assert _cli("test", "--method", "fermat2", "341").returncode == 0
        assert _cli("test", "--method", "generic", "--seq", "ones", "6").returncode == 1
        assert _cli("test", "--method", "lucas", "1").returncode == 2
        assert _cli("compositae", "--seq", "inline:1,1", "--n", "3").returncode == 2

        a = _cli("selfcheck", "--trials", "50", "--max", "30", "--seed", "7")
        b = _cli("selfcheck", "--trials", "50", "--max", "30", "--seed", "7")
        assert a.returncode == 0
        assert a.stdout == b.stdout
