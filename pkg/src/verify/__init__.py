"""Convergence runs, error-term fitting and the acceptance suites."""

from .fitting import fit_error_constant, fit_on_grid, stable_under_doubling, loglog_fit
from .convergence import (
    measure_normalizer,
    cdf_sup_error,
    pairing_error,
    histogram_l1_error,
    run_convergence,
    mass_limit,
    mass_asymptotics,
    sublinear_error_terms,
    linearization_discrepancy,
    column_mass_check,
    column_moment,
    gap_mass_ratio,
)
from .console import SuiteLogger, get_suite_logger, set_debug
from .suites import SUITE_FUNCTIONS, run_suite, run_suites

__all__ = [
    # Fitting
    "fit_error_constant",
    "fit_on_grid",
    "stable_under_doubling",
    "loglog_fit",
    # Convergence
    "measure_normalizer",
    "cdf_sup_error",
    "pairing_error",
    "histogram_l1_error",
    "run_convergence",
    "mass_limit",
    "mass_asymptotics",
    "sublinear_error_terms",
    # Auxiliary measures
    "linearization_discrepancy",
    "column_mass_check",
    "column_moment",
    "gap_mass_ratio",
    # Suites
    "SuiteLogger",
    "get_suite_logger",
    "set_debug",
    "SUITE_FUNCTIONS",
    "run_suite",
    "run_suites",
]
