# -----------------------------------------------------------------------------
# Limit Densities
#
# Pair correlation functions of the weak-star limits, the finite-N
# density θ_N of the linearised measure, and the limiting CDFs.
#
#   unscaled, trivial weights     s ↦ ½ e^{-|s|}
#   ψ/N → 0, trivial weights      1/(2b²)
#   ψ/N → λ, trivial weights      θ_∞(t) = ⌊|t|/(bλ)⌋(⌊|t|/(bλ)⌋+1)/(2t²)
#   ψ/N → ∞                       0
#   unscaled, Euler weights       s ↦ e^{-2|s|}
#   ψ = N, Euler weights          s ↦ s⁻⁴ Σ_{1<=k<=|s|, b|k} c_{a,b,k} k³
# -----------------------------------------------------------------------------
import math
import threading
from dataclasses import dataclass, replace
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np

from arith.constants import c_abk_cached
from config.errors import ConfigurationError, InvalidParameterError
from config.settings import get_prime_cutoff
from family.scaling import classify_regime
from family.schema import RegimeKind, ScalingKind, ScalingSpec, WeightedLogFamily


class LimitRegime(str, Enum):
    UNSCALED_TRIVIAL = "unscaled_trivial"
    SUBLINEAR_TRIVIAL = "sublinear_trivial"
    LINEAR_TRIVIAL = "linear_trivial"
    SUPERLINEAR_ZERO = "superlinear_zero"
    UNSCALED_EULER = "unscaled_euler"
    LINEAR_EULER = "linear_euler"


# =============================================================================
# POINTWISE DENSITIES
# =============================================================================

def g_unscaled_trivial(s):
    """½ e^{-|s|}."""
    return 0.5 * np.exp(-np.abs(s))


def g_sublinear_trivial(b: int) -> float:
    """The constant 1/(2b²), independent of a."""
    if b < 1:
        raise InvalidParameterError(f"Need b >= 1, got {b}")
    return 1.0 / (2.0 * b * b)


def g_linear_trivial(t, b: int, lam: float):
    """θ_∞(t), zero exactly on ]-bλ, bλ[."""
    if not lam > 0:
        raise InvalidParameterError(f"Need lambda > 0, got {lam}")
    t = np.asarray(t, dtype=np.float64)
    k = np.floor(np.abs(t) / (b * lam))
    with np.errstate(divide="ignore", invalid="ignore"):
        value = np.where(k > 0, k * (k + 1.0) / (2.0 * t * t), 0.0)
    return value if value.ndim else float(value)


def theta_N(t, N: int, b: int, psi: float):
    """θ_N(t) = ⌊tN/(b(ψ+t))⌋(⌊tN/(b(ψ+t))⌋ + 1)/(2t²) for t > 0.

    Vanishes for t < bψ/(N-b); the floor is taken as-is at the jumps.
    """
    if N <= b:
        raise InvalidParameterError(f"theta_N needs N > b, got N={N}, b={b}")
    t = np.asarray(t, dtype=np.float64)
    if np.any(t <= 0):
        raise InvalidParameterError("theta_N is defined for t > 0")
    k = np.floor(t * N / (b * (psi + t)))
    value = k * (k + 1.0) / (2.0 * t * t)
    return value if value.ndim else float(value)


def theta_N_threshold(N: int, b: int, psi: float) -> float:
    """bψ(N)/(N - b): θ_N vanishes below this point."""
    return b * psi / (N - b)


def g_unscaled_euler(s):
    """e^{-2|s|}."""
    return np.exp(-2.0 * np.abs(s))


# Partial sums Σ_{k<=K, b|k} c_{a,b,k} k³, grown on demand per (a, b, P)
_cumulative: Dict[Tuple[int, int, int], List[float]] = {}
_cumulative_lock = threading.Lock()


def linear_euler_partial_sums(a: int, b: int, K: int, P: Optional[int] = None) -> List[float]:
    """[S(0), ..., S(K)] with S(j) = Σ_{1<=k<=j, b|k} c_{a,b,k} k³."""
    P = get_prime_cutoff() if P is None else int(P)
    key = (a, b, P)
    with _cumulative_lock:
        sums = _cumulative.setdefault(key, [0.0])
        for j in range(len(sums), K + 1):
            term = c_abk_cached(a, b, j, P) * float(j) ** 3 if j % b == 0 else 0.0
            sums.append(sums[-1] + term)
        return sums[:K + 1]


def g_linear_euler(s, a: int, b: int, P: Optional[int] = None):
    """s⁻⁴ Σ_{1<=k<=|s|, k≡0 (b)} c_{a,b,k} k³, zero on ]-b, b[."""
    s_arr = np.asarray(s, dtype=np.float64)
    top = int(np.floor(np.max(np.abs(s_arr)))) if s_arr.size else 0
    sums = np.array(linear_euler_partial_sums(a, b, top, P))
    k = np.floor(np.abs(s_arr)).astype(np.int64)
    with np.errstate(divide="ignore", invalid="ignore"):
        value = np.where(k >= 1, sums[k] / s_arr ** 4, 0.0)
    return value if value.ndim else float(value)


def limit_cdf_trivial(s):
    """D(s) = ½eˢ for s <= 0 and 1 - ½e^{-s} for s >= 0."""
    s = np.asarray(s, dtype=np.float64)
    value = np.where(s <= 0, 0.5 * np.exp(np.minimum(s, 0.0)), 1.0 - 0.5 * np.exp(-np.maximum(s, 0.0)))
    return value if value.ndim else float(value)


def limit_cdf_euler(s):
    """D̃(s) = ½e^{2s} for s <= 0 and 1 - ½e^{-2s} for s >= 0."""
    return limit_cdf_trivial(2.0 * np.asarray(s, dtype=np.float64))


# -----------------------------------------------------------------------------
# LimitDensity - evaluable pair correlation function of one regime
#
# `dilation` d turns g into its pushforward under t ↦ d·t,
# s ↦ g(s/d)/d, which is how limits of perpendicular measures arise.
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class LimitDensity:
    regime: LimitRegime
    a: int = 1
    b: int = 1
    lam: float = 1.0
    prime_cutoff: Optional[int] = None
    dilation: float = 1.0

    def __call__(self, s):
        d = self.dilation
        u = np.asarray(s, dtype=np.float64) / d
        if self.regime == LimitRegime.UNSCALED_TRIVIAL:
            value = g_unscaled_trivial(u)
        elif self.regime == LimitRegime.UNSCALED_EULER:
            value = g_unscaled_euler(u)
        elif self.regime == LimitRegime.SUBLINEAR_TRIVIAL:
            value = np.full_like(u, g_sublinear_trivial(self.b))
        elif self.regime == LimitRegime.SUPERLINEAR_ZERO:
            value = np.zeros_like(u)
        elif self.regime == LimitRegime.LINEAR_TRIVIAL:
            value = np.asarray(g_linear_trivial(u, self.b, self.lam))
        else:
            value = np.asarray(g_linear_euler(u, self.a, self.b, self.prime_cutoff))
        value = value / d
        return value if np.ndim(value) else float(value)

    @property
    def has_cdf(self) -> bool:
        return self.regime in (LimitRegime.UNSCALED_TRIVIAL, LimitRegime.UNSCALED_EULER)

    def cdf(self, s):
        """Limiting CDF (probability-normalised regimes only)."""
        u = np.asarray(s, dtype=np.float64) / self.dilation
        if self.regime == LimitRegime.UNSCALED_TRIVIAL:
            return limit_cdf_trivial(u)
        if self.regime == LimitRegime.UNSCALED_EULER:
            return limit_cdf_euler(u)
        raise ConfigurationError(f"No cumulative distribution for regime {self.regime.value}")

    @property
    def exponential(self) -> Optional[Tuple[float, float]]:
        """(amplitude A, rate κ) when g(s) = A e^{-κ|s|}."""
        d = self.dilation
        if self.regime == LimitRegime.UNSCALED_TRIVIAL:
            return 0.5 / d, 1.0 / d
        if self.regime == LimitRegime.UNSCALED_EULER:
            return 1.0 / d, 2.0 / d
        return None

    @property
    def constant(self) -> Optional[float]:
        if self.regime == LimitRegime.SUBLINEAR_TRIVIAL:
            return g_sublinear_trivial(self.b) / self.dilation
        if self.regime == LimitRegime.SUPERLINEAR_ZERO:
            return 0.0
        return None

    @property
    def repulsion_radius(self) -> float:
        """g vanishes exactly on ]-r, r[."""
        if self.regime == LimitRegime.LINEAR_TRIVIAL:
            return self.b * self.lam * self.dilation
        if self.regime == LimitRegime.LINEAR_EULER:
            return self.b * self.dilation
        return 0.0

    def jumps(self, lo: float, hi: float) -> List[float]:
        """Discontinuities of g inside [lo, hi]."""
        if self.regime == LimitRegime.LINEAR_TRIVIAL:
            step = self.b * self.lam * self.dilation
        elif self.regime == LimitRegime.LINEAR_EULER:
            step = self.b * self.dilation
        else:
            return []
        top = max(abs(lo), abs(hi))
        points = []
        for j in range(1, int(math.floor(top / step)) + 1):
            for x in (j * step, -j * step):
                if lo <= x <= hi:
                    points.append(x)
        return sorted(points)

    def doubled(self) -> "LimitDensity":
        return doubled(self)

    def label(self) -> str:
        base = self.regime.value
        if self.regime == LimitRegime.LINEAR_TRIVIAL:
            base += f"(b={self.b},lambda={self.lam:g})"
        elif self.regime in (LimitRegime.SUBLINEAR_TRIVIAL,):
            base += f"(b={self.b})"
        elif self.regime == LimitRegime.LINEAR_EULER:
            base += f"(a={self.a},b={self.b})"
        if self.dilation != 1.0:
            base += f"*{self.dilation:g}"
        return base


def doubled(density: LimitDensity) -> LimitDensity:
    """Pushforward of the density under t ↦ 2t."""
    return replace(density, dilation=2.0 * density.dilation)


# -----------------------------------------------------------------------------
# limit_for - the limit of a (family, scaling) configuration
# -----------------------------------------------------------------------------
def _is_unscaled(scaling: ScalingSpec) -> bool:
    return scaling.kind == ScalingKind.TRIVIAL or (scaling.kind == ScalingKind.POWER and scaling.alpha == 0)


def limit_for(family: WeightedLogFamily, scaling: ScalingSpec, P: Optional[int] = None) -> LimitDensity:
    regime = classify_regime(scaling)
    if regime.kind == RegimeKind.UNCLASSIFIED:
        raise ConfigurationError(f"Scaling {scaling.label()} has no classified regime")

    if family.is_euler:
        if _is_unscaled(scaling):
            return LimitDensity(LimitRegime.UNSCALED_EULER, a=family.a, b=family.b)
        if regime.kind == RegimeKind.FINITE and regime.lam == 1.0 and not regime.heuristic:
            return LimitDensity(LimitRegime.LINEAR_EULER, a=family.a, b=family.b, prime_cutoff=P)
        raise ConfigurationError(
            f"Euler weights have a known limit only for trivial and linear scaling, got {scaling.label()}"
        )

    if _is_unscaled(scaling):
        return LimitDensity(LimitRegime.UNSCALED_TRIVIAL, a=family.a, b=family.b)
    if regime.kind == RegimeKind.ZERO:
        return LimitDensity(LimitRegime.SUBLINEAR_TRIVIAL, a=family.a, b=family.b)
    if regime.kind == RegimeKind.FINITE:
        return LimitDensity(LimitRegime.LINEAR_TRIVIAL, a=family.a, b=family.b, lam=regime.lam)
    return LimitDensity(LimitRegime.SUPERLINEAR_ZERO, a=family.a, b=family.b)
