"""Closed-form limit densities and limit-side integrals."""

from .densities import (
    LimitRegime,
    LimitDensity,
    g_unscaled_trivial,
    g_sublinear_trivial,
    g_linear_trivial,
    theta_N,
    theta_N_threshold,
    g_unscaled_euler,
    g_linear_euler,
    linear_euler_partial_sums,
    limit_cdf_trivial,
    limit_cdf_euler,
    doubled,
    limit_for,
)
from .integrals import (
    hat_exponential_integral,
    integrate,
    interval_integral,
    bin_averages,
)

__all__ = [
    # Densities
    "LimitRegime",
    "LimitDensity",
    "g_unscaled_trivial",
    "g_sublinear_trivial",
    "g_linear_trivial",
    "theta_N",
    "theta_N_threshold",
    "g_unscaled_euler",
    "g_linear_euler",
    "linear_euler_partial_sums",
    "limit_cdf_trivial",
    "limit_cdf_euler",
    "doubled",
    "limit_for",
    # Integrals
    "hat_exponential_integral",
    "integrate",
    "interval_integral",
    "bin_averages",
]
