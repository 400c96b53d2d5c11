# -----------------------------------------------------------------------------
# Convergence Runs
#
# Builds the empirical measure at each horizon, compares it with the
# limit on the side of the chosen observable, and fits the decay of
# the error on log-log data. Also holds the auxiliary mass checks on
# column and gap measures.
# -----------------------------------------------------------------------------
import math
from typing import Callable, Dict, Optional, Sequence, Tuple, Union

import numpy as np

from arith.constants import c_ab, c_abk_product
from arith.sieve import Sieve, shared_sieve
from arith.sums import mertens_congruence_sum, mirsky_sum, normalize_residue
from config.errors import ConfigurationError, InvalidParameterError
from config.logging import get_module_logger
from family.schema import (
    IndexVariant,
    ScalingKind,
    ScalingSpec,
    WeightMode,
    WeightedLogFamily,
)
from family.scaling import natural_normalizer, normalizer_value
from limits.densities import LimitDensity, LimitRegime, limit_for
from limits.integrals import bin_averages, integrate
from measures.atomic import AtomicMeasure
from measures.builders import (
    build_column_measure,
    build_linearized_upper,
    build_pair_correlation,
)
from measures.histogram import bin_measure
from measures.observables import TestFunction
from measures.statistics import cdf_grid, pair
from reports.schemas import ConvergenceReport, MassReport, MassRow
from verify.fitting import loglog_fit

logger = get_module_logger("verify.convergence")

Observable = str
DEFAULT_CDF_GRID = (-3.0, -2.0, -1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 1.0, 2.0, 3.0)
DEFAULT_HISTOGRAM_SUPPORT = (-4.0, 4.0)
DEFAULT_HISTOGRAM_BINS = 100


# =============================================================================
# PER-HORIZON ERRORS
# =============================================================================

def measure_normalizer(
    measure: AtomicMeasure,
    family: WeightedLogFamily,
    scaling: ScalingSpec,
    N: int,
) -> float:
    """ψ′(N) for the natural normalizer of the configuration."""
    kind = natural_normalizer(family, scaling)
    return normalizer_value(kind, scaling, N, measure.total_mass)


def cdf_sup_error(measure: AtomicMeasure, density: LimitDensity, grid: Sequence[float] = DEFAULT_CDF_GRID) -> float:
    """sup over the grid of |empirical CDF - limiting CDF|."""
    if not density.has_cdf:
        raise ConfigurationError(f"Regime {density.regime.value} has no limiting CDF")
    points = np.asarray(grid, dtype=np.float64)
    return float(np.max(np.abs(cdf_grid(measure, points) - density.cdf(points))))


def pairing_error(
    measure: AtomicMeasure,
    density: LimitDensity,
    test_functions: Sequence[TestFunction],
    normalizer: float,
) -> float:
    """max over test functions of |pair(R_N, f)/ψ′ - ∫ f g|."""
    if not test_functions:
        raise InvalidParameterError("pairing_error needs at least one test function")
    return max(abs(pair(measure, f, normalizer) - integrate(density, f)) for f in test_functions)


def histogram_l1_error(
    measure: AtomicMeasure,
    density: LimitDensity,
    normalizer: float,
    support: Tuple[float, float] = DEFAULT_HISTOGRAM_SUPPORT,
    bins: int = DEFAULT_HISTOGRAM_BINS,
) -> float:
    """Σ |empirical bin density - mean of g over the bin| · bin width."""
    histogram = bin_measure(measure, support=support, bins=bins, normalization=normalizer)
    expected = bin_averages(density, histogram.bin_edges)
    return float(np.sum(np.abs(histogram.density() - expected)) * histogram.bin_width)


# -----------------------------------------------------------------------------
# run_convergence - errors over increasing horizons with a log-log fit
# -----------------------------------------------------------------------------
def run_convergence(
    regime: Union[LimitRegime, str],
    family: WeightedLogFamily,
    scaling: ScalingSpec,
    horizons: Sequence[int],
    test_functions: Sequence[TestFunction] = (),
    observable: Observable = "pairing_error",
    sieve: Optional[Sieve] = None,
    grid: Sequence[float] = DEFAULT_CDF_GRID,
    support: Tuple[float, float] = DEFAULT_HISTOGRAM_SUPPORT,
    bins: int = DEFAULT_HISTOGRAM_BINS,
    prime_cutoff: Optional[int] = None,
) -> ConvergenceReport:
    """
    Compare empirical measures with the limit of `regime` at every horizon.

    Raises:
        ConfigurationError: the (family, scaling) pair converges to another regime
        InvalidParameterError: bad horizons or an unknown observable
    """
    regime = LimitRegime(regime)
    density = limit_for(family, scaling, prime_cutoff)
    if density.regime != regime:
        raise ConfigurationError(
            f"Configuration {family.weight_mode.value}/{scaling.label()} converges to "
            f"{density.regime.value}, not {regime.value}"
        )
    horizons = [int(n) for n in horizons]
    if not horizons or horizons[0] < 2 or any(b <= a for a, b in zip(horizons, horizons[1:])):
        raise InvalidParameterError(f"Horizons must be increasing and >= 2, got {horizons}")

    if sieve is None and family.is_euler:
        sieve = shared_sieve(horizons[-1])

    errors = []
    for N in horizons:
        measure = build_pair_correlation(family, N, scaling, sieve)
        if observable == "cdf_sup_error":
            error = cdf_sup_error(measure, density, grid)
        elif observable == "pairing_error":
            error = pairing_error(measure, density, test_functions, measure_normalizer(measure, family, scaling, N))
        elif observable == "histogram_l1_error":
            normalizer = measure_normalizer(measure, family, scaling, N)
            error = histogram_l1_error(measure, density, normalizer, support, bins)
        else:
            raise InvalidParameterError(
                f"Unknown observable: {observable}. "
                "Available: cdf_sup_error, pairing_error, histogram_l1_error"
            )
        logger.debug(f"{regime.value} N={N} {observable}={error:.3e}")
        errors.append(error)

    rate, constant = loglog_fit(horizons, errors)
    return ConvergenceReport(
        regime=regime.value,
        observable=observable,
        horizons=horizons,
        errors=errors,
        fitted_rate=rate,
        fitted_constant=constant,
        test_functions=[f.label() for f in test_functions],
    )


# =============================================================================
# MASS ASYMPTOTICS
# =============================================================================

def mass_limit(family: WeightedLogFamily) -> float:
    """lim ‖ν_N⁻‖/N² = 1/(2b²), or lim ‖ν̃_N⁻‖/N⁴ = 9c²_{a,b}/(2π⁴)."""
    if family.is_euler:
        c = float(c_ab(family.a, family.b).value)
        return 9.0 * c * c / (2.0 * math.pi ** 4)
    return 1.0 / (2.0 * family.b * family.b)


def mass_asymptotics(
    family: WeightedLogFamily,
    horizons: Sequence[int],
    sieve: Optional[Sieve] = None,
) -> MassReport:
    """Exact lower-half masses against their main terms."""
    limit = mass_limit(family)
    power = 4 if family.is_euler else 2
    if sieve is None and family.is_euler and horizons:
        sieve = shared_sieve(max(horizons))
    rows = []
    for N in horizons:
        measure = build_pair_correlation(family, int(N), ScalingSpec(ScalingKind.TRIVIAL), sieve, half=IndexVariant.LOWER)
        mass = measure.total_mass
        normalized = mass / float(N) ** power
        rows.append(MassRow(
            N=int(N),
            exact_mass=mass,
            normalized=normalized,
            limit=limit,
            relative_error=abs(normalized / limit - 1.0) if mass else None,
        ))
    return MassReport(a=family.a, b=family.b, weights=family.weight_mode.value, rows=rows)


def sublinear_error_terms(psi: float, N: int, A: float) -> Dict[str, float]:
    """Sizes of the error terms for the sublinear regime, f supported in [0, A] with A >= 3.

    The sup-norm part has three terms; the derivative part one. The largest names the
    dominant error at this horizon.
    """
    A = max(float(A), 3.0)
    ratio = psi / N
    return {
        "psi_log_A_over_N": ratio * math.log(A),
        "A2_over_psi": A * A / psi,
        "ratio_log_ratio": -ratio * math.log(ratio),
        "A3_over_psi": A ** 3 / psi,
    }


# =============================================================================
# AUXILIARY MEASURES
# =============================================================================

def linearization_discrepancy(
    family: WeightedLogFamily,
    N: int,
    f: Union[TestFunction, Callable[[np.ndarray], np.ndarray]],
    scaling: Optional[ScalingSpec] = None,
    sieve: Optional[Sieve] = None,
) -> float:
    """|pair(R_N, f) - pair(μ_N⁺, f)| / ψ(N) for f supported in ]0, ∞[."""
    scaling = scaling or ScalingSpec(ScalingKind.LINEAR)
    if isinstance(f, TestFunction) and f.support[0] < 0:
        raise InvalidParameterError("Test function must be supported in ]0, +inf[")
    exact = build_pair_correlation(family, N, scaling, sieve, half=IndexVariant.UPPER)
    linear = build_linearized_upper(family, N, scaling, sieve)
    return abs(pair(exact, f) - pair(linear, f)) / scaling.psi(N)


def column_mass_check(a: int, b: int, q: int, sieve: Optional[Sieve] = None) -> Tuple[int, float]:
    """(‖ω̃_q‖, ‖ω̃_q‖·π²/(3c_{a,b}q²)); the ratio tends to 1."""
    a = normalize_residue(a, b)
    mass = mertens_congruence_sum(q - 1, a, b, sieve)
    c = float(c_ab(a, b).value)
    return mass, mass * math.pi ** 2 / (3.0 * c * q * q)


def column_moment(a: int, b: int, q: int, sieve: Optional[Sieve] = None) -> float:
    """Mean of the normalised ω̃_q, which tends to ∫ t·2t dt = 2/3."""
    family = WeightedLogFamily(a=a, b=b, weight_mode=WeightMode.EULER)
    measure = build_column_measure(family, q, sieve)
    if measure.total_mass == 0:
        raise InvalidParameterError(f"Column measure is empty for q = {q}, a = {a}, b = {b}")
    return pair(measure, lambda t: t, measure.total_mass)


def gap_mass_ratio(a: int, b: int, p: int, N: int, P: Optional[int] = None, sieve: Optional[Sieve] = None) -> float:
    """‖ω̃_{p,N}‖·3/(c_{a,b,p}(N-p)³), tending to 1 as N grows."""
    if p < 1 or p % b:
        raise InvalidParameterError(f"Gap p must be a positive multiple of b = {b}, got {p}")
    if N <= p:
        raise InvalidParameterError(f"Need N > p, got N = {N}, p = {p}")
    a = normalize_residue(a, b)
    mass = mirsky_sum(N - p, a, b, p, sieve)
    c = c_abk_product(a, b, p, P).value
    return mass * 3.0 / (c * float(N - p) ** 3)
