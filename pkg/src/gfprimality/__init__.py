"""Compositae of integer power series, the integrality of ln(1/(1 - F(x)))
superpositions, and the Fermat-style compositeness tests they induce."""

from .compositae import (
    CompositaeTable,
    binomial,
    compositae_all_ones,
    compositae_bruteforce,
    compositae_catalan,
    compositae_fib,
    compositae_table,
    compositions,
    superpose,
)
from .primality import (
    Method,
    Outcome,
    PrimalityVerdict,
    central_binomial_test,
    fermat_base2_test,
    gf_primality_test,
    is_prime_trial_division,
    lucas_number,
    lucas_variant_test,
    pseudoprime_scan,
)
from .sequence import IntSequence, catalan_shift, fib_gf, ones, primes_with_one
from .series import (
    OrderMismatchError,
    TruncatedSeries,
    series_add,
    series_derivative,
    series_log_inv_one_minus,
    series_mul,
    series_pad,
    series_reciprocal_one_minus,
)
from .sums import (
    IntegralityError,
    TheoremSumReport,
    corollary_sum,
    divisibility_witness,
    theorem2_sum,
    theorem_report,
    theorem_reports,
)

__version__ = "0.1.0"

__all__ = [
    "IntSequence",
    "catalan_shift",
    "fib_gf",
    "ones",
    "primes_with_one",
    "CompositaeTable",
    "IntegralityError",
    "Method",
    "OrderMismatchError",
    "Outcome",
    "PrimalityVerdict",
    "TheoremSumReport",
    "TruncatedSeries",
    "binomial",
    "central_binomial_test",
    "compositae_all_ones",
    "compositae_bruteforce",
    "compositae_catalan",
    "compositae_fib",
    "compositae_table",
    "compositions",
    "corollary_sum",
    "divisibility_witness",
    "fermat_base2_test",
    "gf_primality_test",
    "is_prime_trial_division",
    "lucas_number",
    "lucas_variant_test",
    "pseudoprime_scan",
    "series_add",
    "series_derivative",
    "series_log_inv_one_minus",
    "series_mul",
    "series_pad",
    "series_reciprocal_one_minus",
    "superpose",
    "theorem2_sum",
    "theorem_report",
    "theorem_reports",
]
