"""Empirical pair correlation measures, statistics and histograms."""

from .atomic import (
    PositionRule,
    AtomBlock,
    AtomicMeasure,
    ProductMeasure,
    PairListMeasure,
    pushforward_double,
    restrict_elements,
)
from .builders import (
    family_weights,
    build_pair_correlation,
    build_linearized_upper,
    build_column_measure,
    build_gap_measure,
)
from .observables import ObservableKind, TestFunction
from .statistics import (
    mass_at_most,
    mass_in_window,
    cdf,
    cdf_grid,
    pair,
    sign_symmetry_defect,
)
from .histogram import Histogram, parse_support, bin_measure

__all__ = [
    # Atomic measures
    "PositionRule",
    "AtomBlock",
    "AtomicMeasure",
    "ProductMeasure",
    "PairListMeasure",
    "pushforward_double",
    "restrict_elements",
    # Builders
    "family_weights",
    "build_pair_correlation",
    "build_linearized_upper",
    "build_column_measure",
    "build_gap_measure",
    # Test functions
    "ObservableKind",
    "TestFunction",
    # Statistics
    "mass_at_most",
    "mass_in_window",
    "cdf",
    "cdf_grid",
    "pair",
    "sign_symmetry_defect",
    # Histograms
    "Histogram",
    "parse_support",
    "bin_measure",
]
