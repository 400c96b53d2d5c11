# -----------------------------------------------------------------------------
# Exact Arithmetic Sums
#
# Brute-force left-hand sides of the Mertens and Mirsky formulas with
# congruence conditions, the bi-congruence counting function and the
# multiplicative function f(n) = Π_{p|n} (1 + 1/(p(p²−2))).
# -----------------------------------------------------------------------------
import math
from typing import Optional

import numpy as np

from arith.sieve import Sieve, factorize, shared_sieve
from arith.summation import CompensatedSum
from config.errors import CapacityError, InvalidParameterError
from config.settings import MIRSKY_MAX_X

# int64 products are summed in chunks this long before being folded into a
# Python int; (10⁷ + k)² · 2¹⁵ stays below 2⁶³.
_CHUNK = 1 << 15


def normalize_residue(a: int, b: int) -> int:
    """Representative of a mod b in 1..b (residue 0 is represented by b)."""
    if b < 1:
        raise InvalidParameterError(f"Modulus b must be >= 1, got {b}")
    return (int(a) - 1) % int(b) + 1


def _validate_ab(a: int, b: int) -> None:
    if a < 1 or b < 1:
        raise InvalidParameterError(f"Need a, b >= 1, got a={a}, b={b}")


def _exact_int_sum(values: np.ndarray) -> int:
    total = 0
    for start in range(0, values.size, _CHUNK):
        total += int(values[start:start + _CHUNK].sum(dtype=np.int64))
    return total


# =============================================================================
# MERTENS / MIRSKY SUMS
# =============================================================================

def mertens_congruence_sum(x: float, a: int, b: int, sieve: Optional[Sieve] = None) -> int:
    """Σ_{1 <= n <= x, n ≡ a (mod b)} φ(n), exactly.

    An empty range (x < first admissible n) gives 0.
    """
    _validate_ab(a, b)
    top = math.floor(x)
    first = normalize_residue(a, b)
    if top < first:
        return 0
    if top > MIRSKY_MAX_X:
        raise CapacityError(f"x = {x} exceeds the hard cap {MIRSKY_MAX_X}")
    if sieve is None:
        sieve = shared_sieve(top)
    sieve.require(top, "x")
    return _exact_int_sum(sieve.phi[first:top + 1:b])


def mirsky_sum(x: float, a: int, b: int, k: int, sieve: Optional[Sieve] = None) -> int:
    """S(x; a, b, k) = Σ_{1 <= n <= x, n ≡ a (mod b)} φ(n)φ(n+k), exactly.

    Products are formed in int64 and accumulated in Python integers.

    Raises:
        CapacityError: x above MIRSKY_MAX_X, or x + k beyond the given sieve
    """
    _validate_ab(a, b)
    if k < 0:
        raise InvalidParameterError(f"Shift k must be >= 0, got {k}")
    top = math.floor(x)
    first = normalize_residue(a, b)
    if top < first:
        return 0
    if top > MIRSKY_MAX_X:
        raise CapacityError(f"x = {x} exceeds the hard cap {MIRSKY_MAX_X}")
    if sieve is None:
        sieve = shared_sieve(top + k)
    sieve.require(top + k, "x + k")

    left = sieve.phi[first:top + 1:b]
    right = sieve.phi[first + k:top + k + 1:b]
    return _exact_int_sum(left * right)


# =============================================================================
# BI-CONGRUENCE COUNT
# =============================================================================

def _crt(r1: int, m1: int, r2: int, m2: int) -> Optional[tuple[int, int]]:
    """Solve m ≡ r1 (m1), m ≡ r2 (m2); None when incompatible."""
    g = math.gcd(m1, m2)
    if (r2 - r1) % g:
        return None
    lcm = m1 // g * m2
    if lcm == 1:
        return 0, 1
    step = m1 // g
    # r1 + m1·t ≡ r2 (m2)  <=>  (m1/g)·t ≡ (r2 - r1)/g (m2/g)
    modulus = m2 // g
    t = 0 if modulus == 1 else ((r2 - r1) // g * pow(step, -1, modulus)) % modulus
    return (r1 + m1 * t) % lcm, lcm


def count_bi_congruence(y: float, alpha0: int, alpha: int, beta0: int, beta: int) -> int:
    """Number of integers 1 <= m <= y with m ≡ α₀ (α) and m ≡ β₀ (β).

    Zero when α₀ ≢ β₀ mod (α, β); otherwise y/[α, β] + O(1).
    """
    if alpha < 1 or beta < 1:
        raise InvalidParameterError(f"Moduli must be >= 1, got {alpha}, {beta}")
    top = math.floor(y)
    if top < 1:
        return 0
    solved = _crt(alpha0 % alpha, alpha, beta0 % beta, beta)
    if solved is None:
        return 0
    residue, lcm = solved
    first = residue if residue > 0 else lcm
    if first > top:
        return 0
    return (top - first) // lcm + 1


# =============================================================================
# THE MULTIPLICATIVE FUNCTIONS f AND g
# =============================================================================

def _f_factor(p: int) -> float:
    return 1.0 + 1.0 / (p * (p * p - 2))


def mult_f(n: int, sieve: Optional[Sieve] = None) -> float:
    """f(n) = Π_{p|n} (1 + 1/(p(p²−2))), with f(1) = 1."""
    if n < 1:
        raise InvalidParameterError(f"f(n) needs n >= 1, got {n}")
    value = 1.0
    for p, _ in factorize(n, sieve):
        value *= _f_factor(p)
    return value


def mult_f_array(limit: int, sieve: Optional[Sieve] = None) -> np.ndarray:
    """f(0..limit) as a float64 array (f[0] is unused and set to 0)."""
    if sieve is None:
        sieve = shared_sieve(limit)
    sieve.require(limit, "limit")
    f = np.ones(limit + 1, dtype=np.float64)
    f[0] = 0.0
    for p in sieve.primes[sieve.primes <= limit]:
        p = int(p)
        f[p::p] *= _f_factor(p)
    return f


def sum_n3_f(x: float, sieve: Optional[Sieve] = None) -> float:
    """Σ_{n <= x} n³ f(n), compensated, in increasing n."""
    top = math.floor(x)
    if top < 1:
        return 0.0
    f = mult_f_array(top, sieve)
    n = np.arange(1, top + 1, dtype=np.float64)
    terms = n ** 3 * f[1:]
    acc = CompensatedSum()
    for start in range(0, terms.size, 4096):
        acc.extend(terms[start:start + 4096])
    return acc.total


def mult_g(m: int, sieve: Optional[Sieve] = None) -> float:
    """g(m) = μ(m)² Π_{p|m} 1/(p(p²−2)), the kernel with f = 1 ⋆ g."""
    if m < 1:
        raise InvalidParameterError(f"g(m) needs m >= 1, got {m}")
    value = 1.0
    for p, e in factorize(m, sieve):
        if e > 1:
            return 0.0
        value /= p * (p * p - 2)
    return value
