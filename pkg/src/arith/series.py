# -----------------------------------------------------------------------------
# Double Möbius Series for c_{a,b,k}
#
# Independent route to the Mirsky constant: the truncated sum over
# squarefree d, δ <= D of μ(d)μ(δ)·G/(d²δ²b), G = ((δ(d,b)), b(d,δ)),
# restricted to (d,δ) | k, (d,b) | a and G | d(k+a). Only used as an
# oracle against the Euler product.
# -----------------------------------------------------------------------------
import math
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from arith.sieve import Sieve, shared_sieve
from arith.summation import CompensatedSum
from config.errors import InvalidParameterError
from config.logging import get_module_logger
from config.settings import get_series_cutoff

logger = get_module_logger("arith.series")


# =============================================================================
# ARITHMETIC FUNCTIONS OF δ
# =============================================================================

def psi_d(d: int, b: int, delta: int) -> int:
    """ψ_d(δ) = (δ, (b/(d,b))·(d,δ))."""
    return math.gcd(delta, (b // math.gcd(d, b)) * math.gcd(d, delta))


def chi_d(d: int, k: int, delta: int) -> int:
    """χ_d(δ) = 1 when (δ, d) divides k, else 0."""
    return 1 if k % math.gcd(delta, d) == 0 else 0


def chi_star_d(d: int, b: int, a: int, k: int, delta: int) -> int:
    """χ*_d(δ) = 1 when ψ_d(δ) divides (d/(d,b))·(k+a), else 0."""
    return 1 if ((d // math.gcd(d, b)) * (k + a)) % psi_d(d, b, delta) == 0 else 0


def series_term(d: int, delta: int, a: int, b: int, k: int, mu_d: int, mu_delta: int) -> float:
    """One term of the double series (0 when a constraint fails)."""
    if mu_d == 0 or mu_delta == 0:
        return 0.0
    g_dd = math.gcd(d, delta)
    g_db = math.gcd(d, b)
    if k % g_dd or a % g_db:
        return 0.0
    big_g = math.gcd(delta * g_db, b * g_dd)
    if (d * (k + a)) % big_g:
        return 0.0
    return mu_d * mu_delta * big_g / (d * d * delta * delta * b)


# =============================================================================
# TRUNCATED SERIES
# =============================================================================

SeriesKey = Tuple[int, int, int]


def _check_series_args(a: int, b: int, k: int) -> None:
    if a < 1 or b < 1 or k < 0:
        raise InvalidParameterError(f"Need a, b >= 1 and k >= 0, got {a}, {b}, {k}")


def c_abk_series_table(
    tuples: Iterable[SeriesKey],
    D: Optional[int] = None,
    sieve: Optional[Sieve] = None,
) -> Dict[SeriesKey, float]:
    """Partial sums over d, δ <= D for many (a, b, k) in one pass over d.

    With g = (d, δ) and e = δ/g, the term only depends on δ through g and
    e mod b: G = g·(e·(d,b), b). Each d-row is therefore compressed to
    classes (g, e mod M), M = lcm of the b values, and every tuple is read
    off the compressed row. Rows are folded in increasing d with
    compensated summation, so results are reproducible.
    """
    keys = list(dict.fromkeys((int(a), int(b), int(k)) for a, b, k in tuples))
    for a, b, k in keys:
        _check_series_args(a, b, k)
    D = get_series_cutoff() if D is None else int(D)
    if D < 1:
        raise InvalidParameterError(f"Series cutoff must be >= 1, got {D}")
    if not keys:
        return {}
    if sieve is None:
        sieve = shared_sieve(D)
    sieve.require(D, "series cutoff")

    # e <= D, so e mod M is e itself once M exceeds D
    modulus = math.lcm(*{b for _, b, _ in keys})
    if modulus > D:
        modulus = D + 1

    groups: Dict[Tuple[int, int], List[int]] = {}
    for a, b, k in keys:
        groups.setdefault((a, b), []).append(k)
    shifts = {ab: np.array(ks, dtype=np.int64) for ab, ks in groups.items()}

    mu = sieve.mu[:D + 1]
    deltas = np.flatnonzero(mu).astype(np.int64)  # squarefree 1..D
    weights = mu[deltas].astype(np.float64) / deltas.astype(np.float64) ** 2

    acc = {key: CompensatedSum() for key in keys}
    for d in deltas:
        d = int(d)
        g_dd = np.gcd(deltas, d)
        classes, inverse = np.unique(g_dd * modulus + (deltas // g_dd) % modulus, return_inverse=True)
        mass = np.bincount(inverse.ravel(), weights=weights, minlength=classes.size)
        g_cls = classes // modulus
        e_cls = classes % modulus
        scale = int(mu[d]) / (d * d)

        for (a, b), ks in shifts.items():
            g_db = math.gcd(d, b)
            if a % g_db:
                continue
            big_g = g_cls * np.gcd((e_cls * g_db) % b, b)
            ok = ((ks[:, None] % g_cls) == 0) & (((d * (ks[:, None] + a)) % big_g) == 0)
            rows = (ok * (mass * big_g)).sum(axis=1)
            for k, row in zip(groups[(a, b)], rows):
                acc[(a, b, k)].add(scale * float(row) / b)

    logger.debug(f"c_abk_series_table: {len(keys)} tuples, D={D}")
    return {key: acc[key].total for key in keys}


def c_abk_series(
    a: int,
    b: int,
    k: int,
    D: Optional[int] = None,
    sieve: Optional[Sieve] = None,
) -> float:
    """Partial sum of the double Möbius series over d, δ <= D."""
    _check_series_args(a, b, k)
    value = c_abk_series_table([(a, b, k)], D, sieve)[(a, b, k)]
    logger.debug(f"c_abk_series(a={a}, b={b}, k={k}, D={D}) = {value}")
    return value
