# -----------------------------------------------------------------------------
# Arithmetic Constants
#
# Exact rational constants (c_{a,b}, Λ) and truncated Euler products
# (c_{a,b,k}, C₁, the linear-scaling asymptote) with certified tail bounds.
#
# Tail bounds: for the primes p > P left out of a product, every factor
# lies in [1 - t_p, 1] (or [1, 1 + t_p]) with t_p <= c/p². Using
# -ln(1 - t) <= t/(1 - t) and Σ_{p>P} 1/p² < 1/(P-1) gives a bound L on
# |ln(true/truncated)|, reported as |true - truncated| <= truncated·(e^L - 1).
# -----------------------------------------------------------------------------
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

from arith.sieve import _prime_mask, factorize, prime_divisors
from arith.sums import normalize_residue
from config.errors import InvalidParameterError
from config.settings import get_prime_cutoff


@dataclass(frozen=True)
class ArithmeticConstants:
    """A constant together with its truncation metadata."""
    name: str
    a: int
    b: int
    k: Optional[int]
    prime_cutoff: int
    value: float
    tail_bound: float
    exact: Optional[Fraction] = None

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "a": self.a,
            "b": self.b,
            "k": self.k,
            "cutoff": self.prime_cutoff,
            "value": self.value,
            "tail_bound": self.tail_bound,
            "exact": None if self.exact is None else str(self.exact),
        }


# =============================================================================
# PRIME TABLES
# =============================================================================

@lru_cache(maxsize=8)
def primes_upto(P: int) -> np.ndarray:
    """Read-only int64 array of the primes <= P."""
    if P < 2:
        raise InvalidParameterError(f"Prime cutoff must be >= 2, got {P}")
    primes = np.flatnonzero(_prime_mask(int(P))).astype(np.int64)
    primes.setflags(write=False)
    return primes


def _with_extra_primes(P: int, extra: Iterable[int]) -> np.ndarray:
    primes = primes_upto(P)
    beyond = sorted({int(p) for p in extra if p > P})
    if not beyond:
        return primes
    return np.concatenate([primes, np.array(beyond, dtype=np.int64)])


def _tail_log_bound(P: int, c: float) -> float:
    """Bound on Σ_{p>P} t_p/(1 - t_p) when t_p <= c/p²."""
    return c / ((1.0 - c / (P * P)) * (P - 1))


def _resolve_cutoff(P: Optional[int]) -> int:
    P = get_prime_cutoff() if P is None else int(P)
    if P < 2:
        raise InvalidParameterError(f"Prime cutoff must be >= 2, got {P}")
    return P


def _check_abk(a: int, b: int, k: int = 0) -> None:
    if a < 1 or b < 1:
        raise InvalidParameterError(f"Need a, b >= 1, got a={a}, b={b}")
    if k < 0:
        raise InvalidParameterError(f"Need k >= 0, got {k}")


def _totient(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


# =============================================================================
# EXACT CONSTANTS
# =============================================================================

def c_ab(a: int, b: int, P: Optional[int] = None) -> ArithmeticConstants:
    """c_{a,b} = φ((a,b))/(b(a,b)) · Π_{p|b} (1 - 1/p²)^{-1}.

    A finite product, so the value is exact and tail_bound is 0.
    """
    _check_abk(a, b)
    P = _resolve_cutoff(P)
    g = math.gcd(a, b)
    exact = Fraction(_totient(g), b * g)
    for p in prime_divisors(b):
        exact *= Fraction(p * p, p * p - 1)
    return ArithmeticConstants(
        name="c_ab", a=a, b=b, k=None, prime_cutoff=P,
        value=float(exact), tail_bound=0.0, exact=exact,
    )


def lambda_abk(a: int, b: int, k: int) -> Fraction:
    """Λ(a, b, k), the lower bound for the 2-factor of b·c_{a,b,k}."""
    _check_abk(a, b, k)
    k_even = k % 2 == 0
    if b % 2:
        return Fraction(5, 8) if k_even else Fraction(1, 2)
    if a % 2:
        return Fraction(1) if k_even else Fraction(1, 2)
    return Fraction(1, 4) if k_even else Fraction(1, 2)


# =============================================================================
# EULER PRODUCTS
# =============================================================================

def _c_abk_factors(primes: np.ndarray, a: int, b: int, k: int) -> np.ndarray:
    """Local factor of c_{a,b,k} at each prime (p | 0 for every p)."""
    p = primes.astype(np.float64)
    p2 = p * p
    pb_int = np.gcd(primes, b)
    pb = pb_int.astype(np.float64)

    divides_ak = ((a + k) % pb_int) == 0
    divides_a = (a % pb_int) == 0

    first = np.where(divides_ak, 1.0 - pb / p2, 1.0)
    kappa = np.where(divides_ak, 1.0 / (1.0 - pb / p2), 1.0)
    kappa_k = np.where((k % primes) == 0, 1.0 - 1.0 / p, 1.0)
    second = np.where(divides_a, 1.0 - pb * kappa * kappa_k / p2, 1.0)
    return first * second


def c_abk_product(a: int, b: int, k: int, P: Optional[int] = None) -> ArithmeticConstants:
    """c_{a,b,k} as an Euler product truncated at P.

    Primes dividing b or k are always included, even above P. The
    truncated value is an upper bound for the true constant.
    """
    _check_abk(a, b, k)
    P = _resolve_cutoff(P)
    extra = prime_divisors(b) + (prime_divisors(k) if k > 0 else [])
    primes = _with_extra_primes(P, extra)
    value = float(np.prod(_c_abk_factors(primes, a, b, k))) / b
    tail = value * math.expm1(_tail_log_bound(P, 2.0))
    return ArithmeticConstants(
        name="c_abk", a=a, b=b, k=k, prime_cutoff=P, value=value, tail_bound=tail,
    )


@lru_cache(maxsize=4096)
def c_abk_cached(a: int, b: int, k: int, P: int) -> float:
    """Memoized c_{a,b,k} value for repeated density evaluations."""
    return c_abk_product(a, b, k, P).value


def c_abk_lower_bound(a: int, b: int, k: int, P: Optional[int] = None) -> ArithmeticConstants:
    """(1/b)Λ Π_{p>=3,(p,b)|a+k}(1 - (p,b)/p²) Π_{p>=3,(p,b)|a}(1 - 2(p,b)/p²).

    Truncated at the same primes as c_abk_product; the comparison is
    prime by prime, so it holds for the truncated products as well.
    """
    _check_abk(a, b, k)
    P = _resolve_cutoff(P)
    extra = prime_divisors(b) + (prime_divisors(k) if k > 0 else [])
    primes = _with_extra_primes(P, extra)
    primes = primes[primes >= 3]
    p2 = primes.astype(np.float64) ** 2
    pb_int = np.gcd(primes, b)
    pb = pb_int.astype(np.float64)
    first = np.where(((a + k) % pb_int) == 0, 1.0 - pb / p2, 1.0)
    second = np.where((a % pb_int) == 0, 1.0 - 2.0 * pb / p2, 1.0)
    value = float(lambda_abk(a, b, k)) * float(np.prod(first * second)) / b
    tail = value * math.expm1(_tail_log_bound(P, 3.0))
    return ArithmeticConstants(
        name="c_abk_lower", a=a, b=b, k=k, prime_cutoff=P, value=value, tail_bound=tail,
    )


def c_11k_mirsky(k: int, P: Optional[int] = None) -> ArithmeticConstants:
    """Mirsky's closed form for c_{1,1,k}: Π_p (1 - 2/p²) · Π_{p|k} (1 + 1/(p(p²-2))).

    For k = 0 every prime divides k and each factor is 1 - 2/p² + 1/p³.
    """
    _check_abk(1, 1, k)
    P = _resolve_cutoff(P)
    if k == 0:
        p = primes_upto(P).astype(np.float64)
        value = float(np.prod(1.0 - 2.0 / p ** 2 + 1.0 / p ** 3))
    else:
        primes = _with_extra_primes(P, prime_divisors(k))
        p = primes.astype(np.float64)
        factors = 1.0 - 2.0 / p ** 2
        divides_k = (k % primes) == 0
        factors = np.where(divides_k, factors * (1.0 + 1.0 / (p * (p * p - 2.0))), factors)
        value = float(np.prod(factors))
    tail = value * math.expm1(_tail_log_bound(P, 2.0))
    return ArithmeticConstants(
        name="c_11k_mirsky", a=1, b=1, k=k, prime_cutoff=P, value=value, tail_bound=tail,
    )


def c_one(P: Optional[int] = None) -> ArithmeticConstants:
    """C₁ = Π_p (1 + 1/(p²(p²-2)))."""
    P = _resolve_cutoff(P)
    p = primes_upto(P).astype(np.float64)
    value = float(np.prod(1.0 + 1.0 / (p * p * (p * p - 2.0))))
    # factors above P are at most 1 + 1/p²
    tail = value * math.expm1(1.0 / (P - 1))
    return ArithmeticConstants(
        name="c_one", a=1, b=1, k=None, prime_cutoff=P, value=value, tail_bound=tail,
    )


def asymptote_constant(P: Optional[int] = None) -> ArithmeticConstants:
    """(1/4) Π_p (1 - 2/p²)(1 + 1/(p²(p²-2))), the limit of g_linear_euler at ±∞ for a = b = 1."""
    P = _resolve_cutoff(P)
    p = primes_upto(P).astype(np.float64)
    factors = (1.0 - 2.0 / (p * p)) * (1.0 + 1.0 / (p * p * (p * p - 2.0)))
    value = 0.25 * float(np.prod(factors))
    tail = value * math.expm1(_tail_log_bound(P, 2.0))
    return ArithmeticConstants(
        name="asymptote", a=1, b=1, k=None, prime_cutoff=P, value=value, tail_bound=tail,
    )


def mirsky_asymptotic(x: float, a: int, b: int, k: int, P: Optional[int] = None) -> float:
    """Main term c_{a,b,k}(x³/3 + kx²/2) of S(x; a, b, k)."""
    P = _resolve_cutoff(P)
    c = c_abk_cached(normalize_residue(a, b), b, k, P)
    return c * (x ** 3 / 3.0 + k * x ** 2 / 2.0)


def mertens_main_term(x: float, a: int, b: int) -> float:
    """(3c_{a,b}/π²)x²."""
    return 3.0 * c_ab(normalize_residue(a, b), b, 2).value / math.pi ** 2 * x * x
