from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional

from config.errors import InvalidParameterError


@dataclass
class SuiteConfig:
    name: str
    description: str
    horizons: List[int] = field(default_factory=list)
    tolerance: float = 0.0
    prime_cutoff: Optional[int] = None
    params: Dict[str, Any] = field(default_factory=dict)
    quick_overrides: Dict[str, Any] = field(default_factory=dict)

    def resolved(self, quick: bool = False) -> "SuiteConfig":
        """This preset, or its reduced-scale variant."""
        if not quick:
            return self
        overrides = dict(self.quick_overrides)
        params = {**self.params, **overrides.pop("params", {})}
        return replace(self, params=params, quick_overrides={}, **overrides)


# =============================================================================
# ARITHMETIC CONSTANTS
# Exact rationals, Λ table, Euler product vs Möbius series
# =============================================================================
CONSTANTS_SUITE = SuiteConfig(
    name="constants_exact",
    description="c_{a,b} exact rationals, the Λ table and the lower bound Λ >= 1/4",
    params={"max_ab": 12, "max_k": 12},
    quick_overrides={"prime_cutoff": 10_000, "params": {"max_ab": 6, "max_k": 6}},
)

ORACLE_SUITE = SuiteConfig(
    name="constants_oracle",
    description="Euler product vs truncated Möbius series for c_{a,b,k}",
    tolerance=1e-2,
    prime_cutoff=1_000_000,
    params={"max_ab": 5, "max_k": 10, "series_cutoff": 10_000, "refine_max_ab": 5, "refine_max_k": 10},
    quick_overrides={
        "prime_cutoff": 100_000,
        "params": {"max_ab": 3, "max_k": 3, "series_cutoff": 1_000, "refine_max_ab": 2, "refine_max_k": 1},
    },
)


# =============================================================================
# ERROR BRACKETS
# Fitted big-O constants must be stable under doubling of the grid
# =============================================================================
MIRSKY_SUITE = SuiteConfig(
    name="mirsky_bracket",
    description="Mirsky sums with congruences: fitted K stable as the x-grid doubles",
    horizons=[1_000, 10_000, 100_000, 1_000_000],
    prime_cutoff=1_000_000,
    params={"max_ab": 5, "max_k": 10, "factor": 2.0},
    quick_overrides={
        "horizons": [1_000, 4_000],
        "prime_cutoff": 100_000,
        "params": {"max_ab": 3, "max_k": 3},
    },
)

MERTENS_SUITE = SuiteConfig(
    name="mertens_bracket",
    description="Mertens sums with congruences: fitted C stable as the x-grid doubles",
    horizons=[1_000, 10_000, 100_000, 1_000_000],
    params={"max_ab": 5, "factor": 2.0},
    quick_overrides={"horizons": [1_000, 4_000], "params": {"max_ab": 3}},
)


# =============================================================================
# MEASURE-LEVEL CONVERGENCE
# =============================================================================
UNSCALED_TRIVIAL_SUITE = SuiteConfig(
    name="unscaled_trivial",
    description="Trivial weights, no scaling: CDF within tolerance of D, decreasing error",
    horizons=[250, 500, 1000, 2000],
    tolerance=0.01,
    params={"max_rate": -0.8},
    quick_overrides={"horizons": [100, 200, 400], "tolerance": 0.05, "params": {"max_rate": -0.5}},
)

UNSCALED_EULER_SUITE = SuiteConfig(
    name="unscaled_euler",
    description="Euler weights, no scaling: CDF within tolerance of D̃",
    horizons=[500, 2000],
    tolerance=0.01,
    quick_overrides={"horizons": [100, 400], "tolerance": 0.05},
)

LINEAR_TRIVIAL_SUITE = SuiteConfig(
    name="linear_trivial",
    description="Trivial weights, linear scaling: level repulsion and agreement with θ_∞",
    horizons=[2000],
    tolerance=0.02,
    params={"repulsion": 0.9, "centers": [1.5, 2.5], "half_width": 0.25},
    quick_overrides={"horizons": [500], "tolerance": 0.05},
)

SUBLINEAR_SUITE = SuiteConfig(
    name="sublinear",
    description="Trivial weights, ψ = N^{1/2} and ψ = N/ln N: constant density 1/(2b²)",
    horizons=[2000],
    tolerance=0.05,
    params={"center": 2.0, "half_width": 1.0, "scalings": ["power:0.5", "invavg"]},
    quick_overrides={"horizons": [1000]},
)

SUPERLINEAR_SUITE = SuiteConfig(
    name="superlinear",
    description="ψ = N^{1.5}: no mass left in a fixed window",
    horizons=[2000],
    params={"alpha": 1.5, "window": 5.0},
    quick_overrides={"horizons": [500]},
)

LINEAR_EULER_SUITE = SuiteConfig(
    name="linear_euler",
    description="Euler weights, linear scaling: binned density against g_linear_euler",
    horizons=[2000],
    tolerance=0.05,
    params={"support": [1.0, 4.0], "bins": 100, "hat_center": 1.5, "hat_half_width": 0.25, "hat_tolerance": 0.01},
    quick_overrides={"horizons": [600], "tolerance": 0.1, "prime_cutoff": 100_000},
)

ASYMPTOTE_SUITE = SuiteConfig(
    name="asymptote",
    description="Mean of g_linear_euler on [50, 100] against (1/4)Π(1-2/p²)(1+1/(p²(p²-2)))",
    tolerance=0.01,
    params={"lo": 50.0, "hi": 100.0, "samples": 2001},
    quick_overrides={"prime_cutoff": 100_000},
)

CUBIC_SUM_SUITE = SuiteConfig(
    name="cubic_sum",
    description="Σ n³f(n) = C₁x⁴/4 + O(x³): normalised residual stable as x doubles",
    horizons=[10_000],
    params={"factor": 2.0},
    quick_overrides={"horizons": [2_000], "prime_cutoff": 100_000},
)

DOUBLING_SUITE = SuiteConfig(
    name="doubling_identity",
    description="Perpendicular measure equals the doubled log measure with Euler weights",
    horizons=[50, 200, 1000],
    params={"levels": [1, 2, 3, 4, 6], "scalings": ["trivial", "linear"]},
    quick_overrides={"horizons": [50, 200], "params": {"levels": [1, 2, 6]}},
)

MASS_SUITE = SuiteConfig(
    name="mass",
    description="Exact lower-half masses against N²/(2b²) and 9c²N⁴/(2π⁴)",
    horizons=[2000],
    params={
        "trivial_levels": [1, 2, 3],
        "trivial_tolerance": 1e-3,
        "euler_classes": [(1, 1), (1, 2), (2, 2), (1, 3), (3, 4), (5, 5)],
        "euler_tolerance": 0.01,
    },
    quick_overrides={"horizons": [1000], "params": {"euler_classes": [(1, 1)]}},
)

PROPERTIES_SUITE = SuiteConfig(
    name="properties",
    description="Multiplicativity, local factors, Gauss identity, symmetries and disjointness",
    params={
        "samples": 10_000,
        "seed": 20240917,
        "gauss_limit": 10_000,
        "g_limit": 100_000,
        "symmetry_horizons": [1, 2, 3, 10, 50, 100, 500],
        "max_ab": 5,
    },
    quick_overrides={
        "params": {"samples": 500, "gauss_limit": 2_000, "g_limit": 5_000, "symmetry_horizons": [1, 2, 3, 10, 40], "max_ab": 3},
    },
)

PERP_LIMIT_SUITE = SuiteConfig(
    name="perp_limit",
    description="Perpendicular measure at trivial scaling: CDF close to D",
    horizons=[2000],
    tolerance=0.01,
    quick_overrides={"horizons": [400], "tolerance": 0.05},
)

AUXILIARY_SUITE = SuiteConfig(
    name="auxiliary",
    description="Linearisation discrepancy, column masses and moments, gap masses",
    horizons=[500, 2000],
    prime_cutoff=1_000_000,
    params={
        "column_q": [100, 1_000, 10_000, 100_000],
        "moment_q": 100_000,
        "gap_horizons": [1_000, 10_000, 100_000],
        "gap_tolerance": 0.02,
        "max_ab": 5,
    },
    quick_overrides={
        "horizons": [200, 800],
        "prime_cutoff": 100_000,
        "params": {"column_q": [100, 1_000, 4_000], "moment_q": 10_000, "gap_horizons": [1_000, 10_000], "gap_tolerance": 0.05, "max_ab": 3},
    },
)


ALL_SUITES: Dict[str, SuiteConfig] = {
    s.name: s
    for s in (
        CONSTANTS_SUITE,
        ORACLE_SUITE,
        MIRSKY_SUITE,
        MERTENS_SUITE,
        UNSCALED_TRIVIAL_SUITE,
        UNSCALED_EULER_SUITE,
        LINEAR_TRIVIAL_SUITE,
        SUBLINEAR_SUITE,
        SUPERLINEAR_SUITE,
        LINEAR_EULER_SUITE,
        ASYMPTOTE_SUITE,
        CUBIC_SUM_SUITE,
        DOUBLING_SUITE,
        MASS_SUITE,
        PROPERTIES_SUITE,
        PERP_LIMIT_SUITE,
        AUXILIARY_SUITE,
    )
}


def get_suite(name: str) -> SuiteConfig:
    if name not in ALL_SUITES:
        raise InvalidParameterError(f"Unknown suite: {name}. Available: {', '.join(ALL_SUITES)}")
    return ALL_SUITES[name]
