# -----------------------------------------------------------------------------
# Acceptance Suites
#
# One suite per acceptance criterion. Each suite reads its sizes and
# tolerances from a SuiteConfig preset (full or quick) and returns a
# list of CheckResults; run_suites merges them in preset order.
# -----------------------------------------------------------------------------
import math
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from arith.constants import (
    asymptote_constant,
    c_ab,
    c_abk_lower_bound,
    c_abk_product,
    c_one,
    lambda_abk,
    mertens_main_term,
    mirsky_asymptotic,
)
from arith.series import c_abk_series_table, chi_d, chi_star_d, psi_d
from arith.sieve import is_squarefree, shared_sieve
from arith.sums import mertens_congruence_sum, mirsky_sum, mult_g, sum_n3_f
from config.errors import LogCorrError
from config.logging import get_module_logger
from config.suite_config import ALL_SUITES, SuiteConfig, get_suite
from family.index_sets import index_set_size
from family.scaling import min_positive_position, parse_scaling
from family.schema import (
    IndexSet,
    IndexVariant,
    ScalingKind,
    ScalingSpec,
    WeightMode,
    WeightedLogFamily,
)
from limits.densities import LimitDensity, LimitRegime, doubled, limit_for
from limits.integrals import integrate
from measures.builders import build_pair_correlation
from measures.observables import TestFunction
from measures.statistics import mass_in_window, pair, sign_symmetry_defect
from modular.perpendiculars import doubling_identity_check, perp_measure
from reports.schemas import CheckResult, SuiteReport, SuiteResult
from verify.console import SuiteLogger, get_suite_logger, set_debug
from verify.convergence import (
    column_mass_check,
    column_moment,
    cdf_sup_error,
    gap_mass_ratio,
    histogram_l1_error,
    linearization_discrepancy,
    mass_asymptotics,
    measure_normalizer,
    run_convergence,
    sublinear_error_terms,
)
from verify.fitting import fit_error_constant, stable_under_doubling

logger = get_module_logger("verify.suites")

ACCEPTANCE_GRID = (-3.0, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0)

TRIVIAL = WeightedLogFamily(1, 1, WeightMode.TRIVIAL)
EULER = WeightedLogFamily(1, 1, WeightMode.EULER)


def _check(name: str, passed: bool, detail: str = "", **values) -> CheckResult:
    return CheckResult(name=name, passed=bool(passed), detail=detail, values=values)


def _classes(max_ab: int):
    """(a, b) with 1 <= a <= b <= max_ab, one representative per residue class."""
    for b in range(1, max_ab + 1):
        for a in range(1, b + 1):
            yield a, b


# =============================================================================
# ARITHMETIC CONSTANTS
# =============================================================================

def constants_exact(config: SuiteConfig) -> List[CheckResult]:
    max_ab, max_k = config.params["max_ab"], config.params["max_k"]
    checks = [_check("c_11_is_one", c_ab(1, 1).exact == 1, f"c_(1,1) = {c_ab(1, 1).exact}")]

    expected = {
        (1, 1, 0): "5/8", (1, 1, 1): "1/2",
        (1, 2, 0): "1", (1, 2, 1): "1/2",
        (2, 2, 0): "1/4", (2, 2, 1): "1/2",
    }
    table = {key: str(lambda_abk(*key)) for key in expected}
    checks.append(_check("lambda_table", table == expected, f"{table}"))

    values = [lambda_abk(a, b, k) for a, b in _classes(max_ab) for k in range(max_k + 1)]
    checks.append(_check("lambda_at_least_quarter", min(values) >= 0.25, f"min = {min(values)}"))

    violations = []
    for a, b in _classes(max_ab):
        for k in range(max_k + 1):
            upper = c_abk_product(a, b, k, config.prime_cutoff).value
            lower = c_abk_lower_bound(a, b, k, config.prime_cutoff).value
            if not (0.0 < lower <= upper < 1.0 / b):
                violations.append((a, b, k))
    checks.append(_check(
        "product_bracket", not violations,
        f"{len(violations)} tuples outside lower bound <= c_abk < 1/b", violations=str(violations[:5]),
    ))
    return checks


def constants_oracle(config: SuiteConfig) -> List[CheckResult]:
    p = config.params
    D = p["series_cutoff"]
    sieve = shared_sieve(4 * D)

    tuples = [(a, b, k) for a, b in _classes(p["max_ab"]) for k in range(p["max_k"] + 1)]
    coarse_table = c_abk_series_table(tuples, D, sieve)
    products = {t: c_abk_product(*t, config.prime_cutoff).value for t in tuples}
    gaps = {t: abs(products[t] - coarse_table[t]) for t in tuples}
    worst_at = max(gaps, key=gaps.get)
    checks = [_check(
        "product_vs_series", gaps[worst_at] < config.tolerance,
        f"max gap {gaps[worst_at]:.3e} at {worst_at} (D = {D})", max_gap=gaps[worst_at],
    )]

    refine = [(a, b, k) for a, b in _classes(p["refine_max_ab"]) for k in range(p["refine_max_k"] + 1)]
    fine_table = c_abk_series_table(refine, 4 * D, sieve)
    for a, b, k in refine:
        t = (a, b, k)
        products.setdefault(t, c_abk_product(a, b, k, config.prime_cutoff).value)
        coarse = gaps.get(t)
        if coarse is None:
            coarse = abs(products[t] - c_abk_series_table([t], D, sieve)[t])
        fine = abs(products[t] - fine_table[t])
        checks.append(_check(
            f"series_refines_a{a}_b{b}_k{k}", fine <= coarse,
            f"gap {coarse:.3e} at D, {fine:.3e} at 4D", coarse=coarse, fine=fine,
        ))
    return checks


# =============================================================================
# ERROR BRACKETS
# =============================================================================

def _mirsky_constant(xs: Sequence[int], max_ab: int, max_k: int, P: Optional[int], sieve) -> float:
    residuals, envelopes = [], []
    for x in xs:
        for a, b in _classes(max_ab):
            for k in range(max_k + 1):
                exact = mirsky_sum(x, a, b, k, sieve)
                residuals.append(exact - mirsky_asymptotic(x, a, b, k, P))
                envelopes.append(x * (x + k) * math.log(2 * x) * math.log(2 * x + k))
    return fit_error_constant(residuals, envelopes)


def mirsky_bracket(config: SuiteConfig) -> List[CheckResult]:
    p = config.params
    xs = config.horizons
    sieve = shared_sieve(2 * max(xs) + p["max_k"])
    coarse = _mirsky_constant(xs, p["max_ab"], p["max_k"], config.prime_cutoff, sieve)
    fine = _mirsky_constant([2 * x for x in xs], p["max_ab"], p["max_k"], config.prime_cutoff, sieve)
    return [_check(
        "mirsky_constant_stable", stable_under_doubling(coarse, fine, p["factor"]),
        f"K = {coarse:.4g} on the grid, {fine:.4g} on the doubled grid", coarse=coarse, fine=fine,
    )]


def _mertens_constant(xs: Sequence[int], max_ab: int, sieve) -> float:
    residuals, envelopes = [], []
    for x in xs:
        for a, b in _classes(max_ab):
            residuals.append(mertens_congruence_sum(x, a, b, sieve) - mertens_main_term(x, a, b))
            envelopes.append(x * math.log(2 * x))
    return fit_error_constant(residuals, envelopes)


def mertens_bracket(config: SuiteConfig) -> List[CheckResult]:
    p = config.params
    xs = config.horizons
    sieve = shared_sieve(2 * max(xs))
    coarse = _mertens_constant(xs, p["max_ab"], sieve)
    fine = _mertens_constant([2 * x for x in xs], p["max_ab"], sieve)
    return [_check(
        "mertens_constant_stable", stable_under_doubling(coarse, fine, p["factor"]),
        f"C = {coarse:.4g} on the grid, {fine:.4g} on the doubled grid", coarse=coarse, fine=fine,
    )]


# =============================================================================
# CONVERGENCE OF MEASURES
# =============================================================================

def unscaled_trivial(config: SuiteConfig) -> List[CheckResult]:
    report = run_convergence(
        LimitRegime.UNSCALED_TRIVIAL, TRIVIAL, ScalingSpec(ScalingKind.TRIVIAL),
        config.horizons, observable="cdf_sup_error", grid=ACCEPTANCE_GRID,
    )
    last, first = report.errors[-1], report.errors[0]
    checks = [
        _check("cdf_error", last < config.tolerance, f"sup |D_N - D| = {last:.3e} at N = {report.horizons[-1]}", error=last),
        _check("error_decreases", last < first, f"{first:.3e} at N = {report.horizons[0]} -> {last:.3e}"),
    ]
    rate = report.fitted_rate
    checks.append(_check(
        "error_rate", rate is not None and rate <= config.params["max_rate"],
        f"fitted rate {rate}", rate=rate,
    ))
    return checks


def unscaled_euler(config: SuiteConfig) -> List[CheckResult]:
    report = run_convergence(
        LimitRegime.UNSCALED_EULER, EULER, ScalingSpec(ScalingKind.TRIVIAL),
        config.horizons, observable="cdf_sup_error", grid=ACCEPTANCE_GRID,
    )
    last = report.errors[-1]
    return [_check(
        "cdf_error", last < config.tolerance,
        f"sup |D~_N - D~| = {last:.3e} at N = {report.horizons[-1]}", error=last,
    )]


def linear_trivial(config: SuiteConfig) -> List[CheckResult]:
    p = config.params
    N = config.horizons[-1]
    scaling = ScalingSpec(ScalingKind.LINEAR)
    measure = build_pair_correlation(TRIVIAL, N, scaling)
    density = limit_for(TRIVIAL, scaling)
    radius = p["repulsion"]

    inside = mass_in_window(measure, -radius, radius)
    checks = [_check(
        "level_repulsion", inside == 0,
        f"mass {inside} on [-{radius}, {radius}], min position {min_positive_position(scaling, N):.6f}",
    )]
    normalizer = measure_normalizer(measure, TRIVIAL, scaling, N)
    for center in p["centers"]:
        hat = TestFunction.hat(center, p["half_width"])
        error = abs(pair(measure, hat, normalizer) - integrate(density, hat))
        checks.append(_check(f"hat_{center:g}", error < config.tolerance, f"|pairing - ∫ hat θ| = {error:.3e}", error=error))
    return checks


def sublinear(config: SuiteConfig) -> List[CheckResult]:
    p = config.params
    N = config.horizons[-1]
    hat = TestFunction.hat(p["center"], p["half_width"])
    checks = []
    for text in p["scalings"]:
        scaling = parse_scaling(text)
        measure = build_pair_correlation(TRIVIAL, N, scaling)
        density = limit_for(TRIVIAL, scaling)
        value = pair(measure, hat, measure_normalizer(measure, TRIVIAL, scaling, N))
        target = integrate(density, hat)
        terms = sublinear_error_terms(scaling.psi(N), N, p["center"] + p["half_width"])
        dominant = max(terms, key=terms.get)
        checks.append(_check(
            f"constant_density_{scaling.label()}", abs(value - target) < config.tolerance,
            f"pairing {value:.4f} vs {target:.4f}, dominant error term {dominant}",
            value=value, target=target, dominant=dominant, **terms,
        ))
    return checks


def superlinear(config: SuiteConfig) -> List[CheckResult]:
    p = config.params
    N = config.horizons[-1]
    scaling = ScalingSpec(ScalingKind.POWER, alpha=p["alpha"])
    window = p["window"]
    inside = mass_in_window(build_pair_correlation(TRIVIAL, N, scaling), -window, window)
    lowest = min_positive_position(scaling, N)
    return [
        _check("mass_escapes", inside == 0, f"mass {inside} on [-{window}, {window}]"),
        _check("support_minimum", lowest > window, f"smallest positive position {lowest:.3f}", minimum=lowest),
    ]


def linear_euler(config: SuiteConfig) -> List[CheckResult]:
    p = config.params
    N = config.horizons[-1]
    scaling = ScalingSpec(ScalingKind.LINEAR)
    measure = build_pair_correlation(EULER, N, scaling)
    density = limit_for(EULER, scaling, config.prime_cutoff)
    normalizer = measure_normalizer(measure, EULER, scaling, N)

    inside = mass_in_window(measure, -1.0, 1.0)
    l1 = histogram_l1_error(measure, density, normalizer, tuple(p["support"]), p["bins"])
    hat = TestFunction.hat(p["hat_center"], p["hat_half_width"])
    hat_error = abs(pair(measure, hat, normalizer) - integrate(density, hat))
    return [
        _check("level_repulsion", inside == 0, f"mass {inside} on [-1, 1]"),
        _check("binned_density", l1 < config.tolerance, f"L1 error {l1:.3e} over {p['bins']} bins", error=l1),
        _check("hat_pairing", hat_error < p["hat_tolerance"], f"|pairing - ∫ hat g| = {hat_error:.3e}", error=hat_error),
    ]


def asymptote(config: SuiteConfig) -> List[CheckResult]:
    p = config.params
    density = LimitDensity(LimitRegime.LINEAR_EULER, a=1, b=1, prime_cutoff=config.prime_cutoff)
    mean = float(np.mean(density(np.linspace(p["lo"], p["hi"], p["samples"]))))
    target = asymptote_constant(config.prime_cutoff).value
    relative = abs(mean / target - 1.0)
    return [_check(
        "asymptote_mean", relative < config.tolerance,
        f"mean {mean:.6f} vs {target:.6f} on [{p['lo']:g}, {p['hi']:g}]", mean=mean, target=target,
    )]


def cubic_sum(config: SuiteConfig) -> List[CheckResult]:
    x = config.horizons[-1]
    C1 = c_one(config.prime_cutoff).value
    sieve = shared_sieve(2 * x)

    def normalized_residual(y: int) -> float:
        return abs(sum_n3_f(y, sieve) - C1 * float(y) ** 4 / 4.0) / float(y) ** 3

    coarse, fine = normalized_residual(x), normalized_residual(2 * x)
    return [_check(
        "cubic_residual_stable", stable_under_doubling(coarse, fine, config.params["factor"]),
        f"|S - C1 x^4/4| / x^3 = {coarse:.4g} at x = {x}, {fine:.4g} at 2x", coarse=coarse, fine=fine,
    )]


def doubling_identity(config: SuiteConfig) -> List[CheckResult]:
    p = config.params
    checks = []
    for text in p["scalings"]:
        scaling = parse_scaling(text)
        for b in p["levels"]:
            for N in config.horizons:
                report = doubling_identity_check(b, N, scaling)
                checks.append(_check(
                    f"doubling_b{b}_N{N}_{scaling.label()}", report.equal,
                    f"{report.atoms_compared} atoms compared" + ("" if report.equal else f", first mismatch {report.first_mismatch}"),
                ))
    return checks


def mass(config: SuiteConfig) -> List[CheckResult]:
    p = config.params
    N = config.horizons[-1]
    checks = []
    for b in p["trivial_levels"]:
        row = mass_asymptotics(WeightedLogFamily(1, b), [N]).rows[0]
        diff = abs(row.normalized - row.limit)
        checks.append(_check(
            f"trivial_b{b}", diff < p["trivial_tolerance"],
            f"|mass/N^2 - 1/(2b^2)| = {diff:.3e}", normalized=row.normalized,
        ))
    for a, b in p["euler_classes"]:
        row = mass_asymptotics(WeightedLogFamily(a, b, WeightMode.EULER), [N]).rows[0]
        checks.append(_check(
            f"euler_a{a}_b{b}", row.relative_error is not None and row.relative_error < p["euler_tolerance"],
            f"mass/N^4 = {row.normalized:.6f} vs {row.limit:.6f}", relative_error=row.relative_error,
        ))
    empty = mass_asymptotics(TRIVIAL, [1]).rows[0]
    checks.append(_check("empty_horizon", empty.exact_mass == 0, f"mass at N = 1 is {empty.exact_mass}"))
    return checks


# =============================================================================
# PROPERTIES
# =============================================================================

def _multiplicativity_failures(samples: int, seed: int) -> int:
    rng = np.random.default_rng(seed)
    failures = checked = 0
    while checked < samples:
        d1, d2 = (int(v) for v in rng.integers(1, 1001, size=2))
        if math.gcd(d1, d2) != 1:
            continue
        d, b, k, a = (int(v) for v in rng.integers(1, 51, size=4))
        checked += 1
        for func in (
            lambda x: psi_d(d, b, x),
            lambda x: chi_d(d, k, x),
            lambda x: chi_star_d(d, b, a, k, x),
        ):
            if func(d1 * d2) != func(d1) * func(d2):
                failures += 1
    return failures


def _prime_formula_failures() -> int:
    failures = 0
    primes = [p for p in range(2, 101) if all(p % q for q in range(2, int(p ** 0.5) + 1))]
    for p in primes:
        for d in range(1, 51):
            for b in range(1, 51):
                expected = p if d % p == 0 else math.gcd(p, b)
                if psi_d(d, b, p) != expected:
                    failures += 1
    return failures


def properties(config: SuiteConfig) -> List[CheckResult]:
    p = config.params
    checks = []

    failures = _multiplicativity_failures(p["samples"], p["seed"])
    checks.append(_check("multiplicativity", failures == 0, f"{failures} failures over {p['samples']} coprime pairs"))

    failures = _prime_formula_failures()
    checks.append(_check("prime_formulas", failures == 0, f"{failures} failures for p <= 100, d, b <= 50"))

    limit = p["g_limit"]
    sieve = shared_sieve(max(limit, p["gauss_limit"]))
    primes = sieve.primes.astype(np.float64)
    bound = float(np.prod(1.0 / (1.0 - 2.0 / primes ** 2)))
    bad = [m for m in range(1, limit + 1) if is_squarefree(m, sieve) and not 0.0 <= mult_g(m, sieve) <= bound / float(m) ** 3]
    checks.append(_check("kernel_bound", not bad, f"{len(bad)} squarefree m <= {limit} above m^-3 Π(1-2/p²)^-1"))

    L = p["gauss_limit"]
    divisor_sums = np.zeros(L + 1, dtype=np.int64)
    for d in range(1, L + 1):
        divisor_sums[d::d] += sieve.phi[d]
    gauss_ok = bool(np.array_equal(divisor_sums[1:], np.arange(1, L + 1)))
    checks.append(_check("gauss_identity", gauss_ok, f"Σ_(d|n) φ(d) = n for n <= {L}"))

    defects = sizes = 0
    for a, b in _classes(p["max_ab"]):
        for mode in WeightMode:
            family = WeightedLogFamily(a, b, mode)
            for N in p["symmetry_horizons"]:
                measure = build_pair_correlation(family, N, ScalingSpec(ScalingKind.TRIVIAL))
                defects += sign_symmetry_defect(measure)
                lower = index_set_size(IndexSet(N, a, b, IndexVariant.LOWER))
                upper = index_set_size(IndexSet(N, a, b, IndexVariant.UPPER))
                if lower != upper or lower + upper != measure.atom_count:
                    sizes += 1
    checks.append(_check("sign_symmetry", defects == 0, f"{defects} asymmetric atoms"))
    checks.append(_check("index_halves", sizes == 0, f"{sizes} horizons where I_N is not the disjoint union of its halves"))

    rng = np.random.default_rng(p["seed"])
    t = rng.uniform(-30.0, 30.0, size=1000)
    densities = [
        LimitDensity(LimitRegime.UNSCALED_TRIVIAL),
        LimitDensity(LimitRegime.SUBLINEAR_TRIVIAL, b=2),
        LimitDensity(LimitRegime.LINEAR_TRIVIAL, b=3, lam=0.7),
        LimitDensity(LimitRegime.SUPERLINEAR_ZERO),
        LimitDensity(LimitRegime.UNSCALED_EULER),
        LimitDensity(LimitRegime.LINEAR_EULER, a=1, b=2, prime_cutoff=config.prime_cutoff),
    ]
    odd = [g.label() for g in densities if not np.array_equal(g(t), g(-t))]
    checks.append(_check("even_densities", not odd, f"not even: {odd}" if odd else "all limit densities are even"))
    return checks


# =============================================================================
# AUXILIARY MEASURES
# =============================================================================

def perp_limit(config: SuiteConfig) -> List[CheckResult]:
    N = config.horizons[-1]
    measure = perp_measure(1, N, ScalingSpec(ScalingKind.TRIVIAL))
    density = doubled(LimitDensity(LimitRegime.UNSCALED_EULER))
    error = cdf_sup_error(measure, density, ACCEPTANCE_GRID)
    return [_check("perp_cdf", error < config.tolerance, f"sup |cdf - D| = {error:.3e} at N = {N}", error=error)]


def auxiliary(config: SuiteConfig) -> List[CheckResult]:
    p = config.params
    checks = []

    bump = TestFunction.smooth_bump(1.5, 0.5)
    first, last = (linearization_discrepancy(TRIVIAL, N, bump) for N in (config.horizons[0], config.horizons[-1]))
    checks.append(_check(
        "linearization", last < first,
        f"discrepancy {first:.3e} at N = {config.horizons[0]}, {last:.3e} at N = {config.horizons[-1]}",
    ))

    qs = p["column_q"]
    sieve = shared_sieve(max(2 * max(qs), max(p["gap_horizons"]) + 5, p["moment_q"]))

    def column_constant(grid):
        residuals, envelopes = [], []
        for q in grid:
            for a, b in _classes(p["max_ab"]):
                residuals.append(column_mass_check(a, b, q, sieve)[1] - 1.0)
                envelopes.append(math.log(q) / q)
        return fit_error_constant(residuals, envelopes)

    coarse, fine = column_constant(qs), column_constant([2 * q for q in qs])
    checks.append(_check(
        "column_mass", stable_under_doubling(coarse, fine),
        f"C = {coarse:.4g} on the grid, {fine:.4g} on the doubled grid", coarse=coarse, fine=fine,
    ))

    q = p["moment_q"]
    # J_q is defined for q ≡ a (mod b): step down to the class
    worst = max(
        abs(column_moment(a, b, q - (q - a) % b, sieve) - 2.0 / 3.0) for a, b in _classes(p["max_ab"])
    )
    checks.append(_check("column_moment", worst < 1.0 / math.sqrt(q), f"max |moment - 2/3| = {worst:.3e} at q = {q}"))

    horizons = p["gap_horizons"]
    bad = []
    for a, b in _classes(p["max_ab"]):
        for gap in range(b, 6, b):
            errors = [abs(gap_mass_ratio(a, b, gap, N, config.prime_cutoff, sieve) - 1.0) for N in horizons]
            if not (errors[-1] < p["gap_tolerance"] and errors[-1] <= errors[0]):
                bad.append((a, b, gap, errors[-1]))
    checks.append(_check(
        "gap_mass", not bad,
        f"{len(bad)} (a, b, p) without ratio -> 1" if bad else f"ratios within {p['gap_tolerance']} at N = {horizons[-1]}",
    ))
    return checks


# =============================================================================
# RUNNER
# =============================================================================

SUITE_FUNCTIONS: Dict[str, Callable[[SuiteConfig], List[CheckResult]]] = {
    "constants_exact": constants_exact,
    "constants_oracle": constants_oracle,
    "mirsky_bracket": mirsky_bracket,
    "mertens_bracket": mertens_bracket,
    "unscaled_trivial": unscaled_trivial,
    "unscaled_euler": unscaled_euler,
    "linear_trivial": linear_trivial,
    "sublinear": sublinear,
    "superlinear": superlinear,
    "linear_euler": linear_euler,
    "asymptote": asymptote,
    "cubic_sum": cubic_sum,
    "doubling_identity": doubling_identity,
    "mass": mass,
    "properties": properties,
    "perp_limit": perp_limit,
    "auxiliary": auxiliary,
}


def run_suite(name: str, quick: bool = False, console: Optional[SuiteLogger] = None) -> SuiteResult:
    """Run one suite; library errors become a failed check instead of aborting the run."""
    config = get_suite(name).resolved(quick)
    console = console or get_suite_logger()
    console.set_phase(name)
    console.suite_status(config.description)
    try:
        checks = SUITE_FUNCTIONS[name](config)
    except LogCorrError as e:
        logger.debug(f"Suite {name} raised {type(e).__name__}: {e}")
        console.log_error(f"{name}: {e}")
        checks = [_check("error", False, f"{type(e).__name__}: {e}")]
    for check in checks:
        console.check_complete(check)
    return SuiteResult(
        name=name,
        description=config.description,
        quick=quick,
        passed=all(c.passed for c in checks),
        checks=checks,
    )


def run_suites(
    names: Optional[Sequence[str]] = None,
    quick: bool = False,
    debug: bool = False,
) -> SuiteReport:
    """Run the named suites (all when None) in preset order."""
    selected = list(ALL_SUITES) if not names else [get_suite(n).name for n in names]
    console = get_suite_logger(debug)
    if debug:
        set_debug(True)
    results = []
    for done, name in enumerate(selected):
        console.update_progress(done, len(selected))
        results.append(run_suite(name, quick, console))
    return SuiteReport(passed=all(r.passed for r in results), suites=results)
