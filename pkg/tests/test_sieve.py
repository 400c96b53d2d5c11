import numpy as np
import pytest
from numpy.testing import assert_array_equal

from arith.sieve import build_sieve, factorize, is_squarefree, prime_divisors
from arith.summation import CompensatedSum, compensated_sum
from config.errors import CapacityError, InvalidParameterError


def test_small_values(sieve):
    assert sieve.phi[12] == 4
    assert sieve.mu[12] == 0
    assert sieve.phi[10] == 4
    assert sieve.mu[10] == 1
    assert sieve.mu[30] == -1
    assert sieve.spf[91] == 7


def test_phi_and_mu_prefix():
    s = build_sieve(12)
    assert_array_equal(s.phi[1:], [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4])
    assert_array_equal(s.mu[1:], [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0])
    assert_array_equal(s.primes, [2, 3, 5, 7, 11])


def test_limit_one():
    s = build_sieve(1)
    assert_array_equal(s.phi[1:], [1])
    assert s.primes.size == 0


def test_bad_limit():
    with pytest.raises(InvalidParameterError):
        build_sieve(0)


def test_sieve_max_from_env(monkeypatch):
    monkeypatch.setenv("LOGCORR_SIEVE_MAX", "1000")
    with pytest.raises(CapacityError):
        build_sieve(1001)


def test_require(sieve):
    sieve.require(sieve.limit)
    with pytest.raises(CapacityError):
        sieve.require(sieve.limit + 1, "x")


def test_gauss_identity(sieve):
    # Σ_{d | n} φ(d) = n
    for n in (1, 12, 360, 9973, 65536):
        divisors = [d for d in range(1, n + 1) if n % d == 0]
        assert sum(int(sieve.phi[d]) for d in divisors) == n


def test_factorize(sieve):
    assert factorize(360, sieve) == [(2, 3), (3, 2), (5, 1)]
    assert factorize(1, sieve) == []
    assert prime_divisors(84, sieve) == [2, 3, 7]
    assert is_squarefree(30, sieve)
    assert not is_squarefree(12, sieve)


def test_compensated_sum_recovers_small_terms():
    values = [1.0, 1e100, 1.0, -1e100]
    assert compensated_sum(values) == 2.0


def test_compensated_merge():
    left, right = CompensatedSum(), CompensatedSum()
    left.extend(np.full(1000, 0.1))
    right.extend(np.full(1000, 0.1))
    left.merge(right)
    assert left.total == pytest.approx(200.0, abs=1e-12)
