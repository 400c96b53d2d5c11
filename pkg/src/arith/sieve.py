# -----------------------------------------------------------------------------
# Totient / Möbius Sieve
#
# Eratosthenes-style numpy sieve producing exact Euler totients, Möbius
# values, primes and smallest prime factors up to a limit. A sieve is
# built once and shared read-only afterwards.
# -----------------------------------------------------------------------------
import math
import threading
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from config.errors import CapacityError, InvalidParameterError
from config.logging import get_module_logger
from config.settings import get_sieve_max

logger = get_module_logger("arith.sieve")


@dataclass(frozen=True)
class Sieve:
    """Arithmetic arrays indexed directly by n (index 0 is unused and holds 0).

    Attributes:
        limit: Largest n covered
        phi: int64 array, phi[n] = φ(n)
        mu: int8 array, mu[n] = μ(n)
        spf: int64 array, spf[n] = smallest prime factor of n (spf[1] = 1)
        primes: int64 array of the primes <= limit
    """
    limit: int
    phi: np.ndarray
    mu: np.ndarray
    spf: np.ndarray
    primes: np.ndarray

    def covers(self, n: int) -> bool:
        return n <= self.limit

    def require(self, n: int, what: str = "value") -> None:
        """Raise CapacityError unless the sieve reaches n."""
        if n > self.limit:
            raise CapacityError(
                f"Sieve limit {self.limit} does not cover {what} {n}; "
                f"build a sieve with limit >= {n}"
            )


# =============================================================================
# CONSTRUCTION
# =============================================================================

def _prime_mask(limit: int) -> np.ndarray:
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for i in range(2, math.isqrt(limit) + 1):
        if is_prime[i]:
            is_prime[i * i::i] = False
    return is_prime


def build_sieve(limit: int) -> Sieve:
    """Build φ, μ, primes and smallest prime factors for 1..limit.

    Args:
        limit: Upper bound (inclusive), at least 1

    Returns:
        Sieve with arrays of length limit + 1

    Raises:
        InvalidParameterError: limit < 1
        CapacityError: limit above the configured maximum or allocation failure
    """
    limit = int(limit)
    if limit < 1:
        raise InvalidParameterError(f"Sieve limit must be >= 1, got {limit}")
    if limit > get_sieve_max():
        raise CapacityError(
            f"Sieve limit {limit} exceeds the configured maximum {get_sieve_max()} "
            f"(LOGCORR_SIEVE_MAX)"
        )

    logger.debug(f"Building sieve up to {limit}")
    try:
        is_prime = _prime_mask(limit)
        primes = np.flatnonzero(is_prime).astype(np.int64)

        phi = np.arange(limit + 1, dtype=np.int64)
        mu = np.ones(limit + 1, dtype=np.int8)
        mu[0] = 0
        spf = np.zeros(limit + 1, dtype=np.int64)
    except MemoryError as exc:
        raise CapacityError(f"Cannot allocate a sieve of limit {limit}") from exc

    root = math.isqrt(limit)
    for p in primes:
        p = int(p)
        # φ(n) *= (1 - 1/p) for every multiple of p
        view = phi[p::p]
        view -= view // p
        mu[p::p] *= -1
        if p <= root:
            mu[p * p::p * p] = 0
            block = spf[p * p::p]
            block[block == 0] = p

    spf[1] = 1
    unmarked = spf == 0
    unmarked[0] = False
    spf[unmarked] = np.flatnonzero(unmarked)

    logger.debug(f"Sieve up to {limit}: {primes.size} primes")
    return Sieve(limit=limit, phi=phi, mu=mu, spf=spf, primes=primes)


# Global sieve instance (lazy initialization, grown on demand)
_shared: Optional[Sieve] = None
_shared_lock = threading.Lock()


def shared_sieve(limit: int) -> Sieve:
    """Return a process-wide sieve covering at least `limit`."""
    global _shared
    with _shared_lock:
        if _shared is None or _shared.limit < limit:
            target = max(int(limit), 1)
            if _shared is not None:
                # grow geometrically so repeated small extensions stay cheap
                target = max(target, min(2 * _shared.limit, get_sieve_max()))
            _shared = build_sieve(target)
        return _shared


# =============================================================================
# FACTORIZATION
# =============================================================================

def factorize(n: int, sieve: Optional[Sieve] = None) -> List[Tuple[int, int]]:
    """Prime factorization of n as sorted (prime, exponent) pairs.

    Uses the smallest-prime-factor table when the sieve covers n and
    trial division otherwise. factorize(1) is the empty list.
    """
    n = int(n)
    if n < 1:
        raise InvalidParameterError(f"Cannot factorize {n}")
    factors: List[Tuple[int, int]] = []
    if sieve is not None and sieve.covers(n):
        while n > 1:
            p = int(sieve.spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        return factors

    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return factors


def prime_divisors(n: int, sieve: Optional[Sieve] = None) -> List[int]:
    """Distinct primes dividing n (empty for n = 1)."""
    return [p for p, _ in factorize(n, sieve)]


def is_squarefree(n: int, sieve: Optional[Sieve] = None) -> bool:
    return all(e == 1 for _, e in factorize(n, sieve))
