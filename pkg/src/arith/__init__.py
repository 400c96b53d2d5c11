"""Number-theoretic kernels: sieves, exact sums, constants and series."""

from .sieve import (
    Sieve,
    build_sieve,
    shared_sieve,
    factorize,
    prime_divisors,
    is_squarefree,
)
from .summation import CompensatedSum, compensated_sum
from .sums import (
    normalize_residue,
    mertens_congruence_sum,
    mirsky_sum,
    count_bi_congruence,
    mult_f,
    mult_f_array,
    sum_n3_f,
    mult_g,
)
from .constants import (
    ArithmeticConstants,
    primes_upto,
    c_ab,
    lambda_abk,
    c_abk_product,
    c_abk_cached,
    c_abk_lower_bound,
    c_11k_mirsky,
    c_one,
    asymptote_constant,
    mirsky_asymptotic,
    mertens_main_term,
)
from .series import psi_d, chi_d, chi_star_d, series_term, c_abk_series, c_abk_series_table

__all__ = [
    # Sieve
    "Sieve",
    "build_sieve",
    "shared_sieve",
    "factorize",
    "prime_divisors",
    "is_squarefree",
    # Summation
    "CompensatedSum",
    "compensated_sum",
    # Exact sums
    "normalize_residue",
    "mertens_congruence_sum",
    "mirsky_sum",
    "count_bi_congruence",
    "mult_f",
    "mult_f_array",
    "sum_n3_f",
    "mult_g",
    # Constants
    "ArithmeticConstants",
    "primes_upto",
    "c_ab",
    "lambda_abk",
    "c_abk_product",
    "c_abk_cached",
    "c_abk_lower_bound",
    "c_11k_mirsky",
    "c_one",
    "asymptote_constant",
    "mirsky_asymptotic",
    "mertens_main_term",
    # Series
    "psi_d",
    "chi_d",
    "chi_star_d",
    "series_term",
    "c_abk_series",
    "c_abk_series_table",
]
