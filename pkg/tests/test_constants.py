import math
from fractions import Fraction

import pytest

from arith.constants import (
    asymptote_constant,
    c_ab,
    c_abk_lower_bound,
    c_abk_product,
    c_11k_mirsky,
    c_one,
    lambda_abk,
    mertens_main_term,
    mirsky_asymptotic,
    primes_upto,
)
from arith.series import c_abk_series, c_abk_series_table, chi_d, psi_d, series_term
from config.errors import InvalidParameterError

P = 100_000


def test_c_ab_exact():
    assert c_ab(1, 1).exact == 1
    assert c_ab(2, 2).exact == Fraction(1, 3)
    assert c_ab(1, 2).exact == Fraction(2, 3)
    assert c_ab(1, 1).tail_bound == 0.0


def test_c_ab_classes_sum_to_one():
    # the classes mod b partition the integers
    for b in (2, 3, 4, 6, 12):
        total = sum(c_ab(a, b).exact for a in range(1, b + 1))
        assert total == 1


@pytest.mark.parametrize("a, b, k, expected", [
    (1, 1, 0, Fraction(5, 8)),
    (1, 1, 1, Fraction(1, 2)),
    (1, 2, 0, Fraction(1)),
    (1, 2, 1, Fraction(1, 2)),
    (2, 2, 0, Fraction(1, 4)),
    (2, 2, 1, Fraction(1, 2)),
])
def test_lambda_table(a, b, k, expected):
    assert lambda_abk(a, b, k) == expected


def test_c_110_closed_form():
    p = primes_upto(P).astype(float)
    expected = math.prod(1.0 - 2.0 / x ** 2 + 1.0 / x ** 3 for x in p)
    assert c_abk_product(1, 1, 0, P).value == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("k", [0, 1, 2, 3, 6, 12])
def test_product_matches_mirsky_closed_form(k):
    product = c_abk_product(1, 1, k, P)
    closed = c_11k_mirsky(k, P)
    assert product.value == pytest.approx(closed.value, rel=1e-12)


def test_c_111_value():
    assert c_abk_product(1, 1, 1, P).value == pytest.approx(0.3226, abs=1e-4)


@pytest.mark.parametrize("a, b, k", [(1, 1, 0), (1, 2, 1), (2, 2, 2), (1, 3, 3), (2, 3, 0), (3, 3, 1)])
def test_lower_bound_brackets_product(a, b, k):
    lower = c_abk_lower_bound(a, b, k, P)
    upper = c_abk_product(a, b, k, P)
    assert lower.value <= upper.value + upper.tail_bound
    assert upper.value < 1.0 / b


def test_tail_bound_shrinks_with_cutoff():
    coarse = c_abk_product(1, 1, 1, 1000)
    fine = c_abk_product(1, 1, 1, 100_000)
    assert fine.tail_bound < coarse.tail_bound
    assert abs(coarse.value - fine.value) <= coarse.tail_bound


def test_c_one_and_asymptote():
    assert c_one(P).value == pytest.approx(1.0 + 1 / 8 + 1 / 63, abs=0.01)
    assert asymptote_constant(P).value == pytest.approx(9.0 / math.pi ** 4, rel=1e-4)


def test_series_oracle_agrees_with_product(sieve):
    series = c_abk_series(1, 1, 1, 2000, sieve)
    assert series == pytest.approx(c_abk_product(1, 1, 1, P).value, rel=1e-2)


def test_series_helpers():
    assert psi_d(1, 1, 6) == 1
    assert chi_d(6, 1, 6) == 0
    assert chi_d(6, 6, 6) == 1
    assert series_term(4, 1, 1, 1, 0, 0, 1) == 0.0
    assert series_term(1, 1, 1, 1, 0, 1, 1) == 1.0


def _series_by_terms(a, b, k, D, sieve):
    return math.fsum(
        series_term(d, delta, a, b, k, int(sieve.mu[d]), int(sieve.mu[delta]))
        for d in range(1, D + 1)
        for delta in range(1, D + 1)
    )


@pytest.mark.parametrize("tuples", [
    [(2, 4, 3)],
    [(1, 1, 0), (2, 4, 3), (3, 5, 10), (1, 3, 2), (4, 6, 6)],
    [(1, 2, 0), (6, 7, 0), (3, 12, 4)],
    [(1, 2, 0), (1, 4, 1), (2, 4, 0), (3, 4, 7)],
])
def test_series_table_matches_term_by_term_sum(sieve, tuples):
    D = 40
    table = c_abk_series_table(tuples, D, sieve)
    assert list(table) == tuples
    for a, b, k in tuples:
        assert table[(a, b, k)] == pytest.approx(_series_by_terms(a, b, k, D, sieve), rel=1e-12, abs=1e-15)


def test_series_table_edges(sieve):
    assert c_abk_series_table([], 10, sieve) == {}
    assert c_abk_series_table([(1, 1, 1), (1, 1, 1)], 10, sieve) == {(1, 1, 1): c_abk_series(1, 1, 1, 10, sieve)}
    with pytest.raises(InvalidParameterError):
        c_abk_series_table([(1, 1, -1)], 10, sieve)
    with pytest.raises(InvalidParameterError):
        c_abk_series_table([(1, 1, 0)], 0, sieve)


def test_main_terms():
    assert mertens_main_term(10.0, 1, 1) == pytest.approx(300.0 / math.pi ** 2)
    c = c_abk_product(1, 1, 2, P).value
    assert mirsky_asymptotic(10.0, 1, 1, 2, P) == pytest.approx(c * (1000.0 / 3.0 + 100.0), rel=1e-12)


def test_bad_arguments():
    with pytest.raises(InvalidParameterError):
        c_ab(0, 1)
    with pytest.raises(InvalidParameterError):
        lambda_abk(1, 1, -1)
    with pytest.raises(InvalidParameterError):
        primes_upto(1)
