import io
import math

import pytest
from pydantic import ValidationError
from rich.console import Console

from config.errors import ConfigurationError, InvalidParameterError
from config.suite_config import ALL_SUITES, get_suite
from family.scaling import parse_scaling
from family.schema import WeightMode, WeightedLogFamily
from limits.densities import LimitRegime
from measures.observables import TestFunction
from reports.schemas import CheckResult, ConvergenceReport, SuiteResult
from verify.convergence import (
    column_mass_check,
    column_moment,
    gap_mass_ratio,
    linearization_discrepancy,
    mass_asymptotics,
    mass_limit,
    run_convergence,
    sublinear_error_terms,
)
from verify.console import SuiteLogger
from verify.fitting import fit_error_constant, fit_on_grid, loglog_fit, stable_under_doubling
from verify.suites import SUITE_FUNCTIONS, run_suite, run_suites

TRIVIAL = WeightedLogFamily()
EULER = WeightedLogFamily(weight_mode=WeightMode.EULER)


# =============================================================================
# FITTING
# =============================================================================

def test_fit_error_constant():
    assert fit_error_constant([0.0, 0.0], [1.0, 2.0]) == 0.0
    assert fit_error_constant([], []) == 0.0
    assert fit_error_constant([1.0, -6.0], [1.0, 2.0]) == 3.0
    assert fit_error_constant([1.0, 2.0], 4.0) == 0.5
    with pytest.raises(InvalidParameterError):
        fit_error_constant([1.0], [0.0])


def test_fit_on_grid():
    assert fit_on_grid([1, 2, 4], lambda x: x * x, lambda x: x) == 4.0


def test_stable_under_doubling():
    assert stable_under_doubling(0.0, 0.0)
    assert stable_under_doubling(1.0, 1.9)
    assert not stable_under_doubling(1.0, 2.5)
    assert not stable_under_doubling(0.0, 1.0)


def test_loglog_fit():
    rate, constant = loglog_fit([10, 100, 1000], [0.3, 0.03, 0.003])
    assert rate == pytest.approx(-1.0)
    assert constant == pytest.approx(3.0)
    assert loglog_fit([10, 100], [0.0, 0.1]) == (None, None)


# =============================================================================
# CONVERGENCE
# =============================================================================

def test_unscaled_trivial_convergence():
    report = run_convergence(
        LimitRegime.UNSCALED_TRIVIAL, TRIVIAL, parse_scaling("trivial"), [50, 100, 200],
        observable="cdf_sup_error",
    )
    assert report.horizons == [50, 100, 200]
    assert len(report.errors) == 3
    assert report.errors[-1] < 0.05
    assert report.fitted_rate is not None


def test_pairing_convergence_records_test_functions():
    hat = TestFunction.hat(1.5, 0.25)
    report = run_convergence(
        "linear_trivial", TRIVIAL, parse_scaling("linear"), [100, 400], test_functions=[hat],
    )
    assert report.test_functions == [hat.label()]
    assert report.errors[-1] < 0.05


def test_histogram_convergence(sieve):
    report = run_convergence(
        LimitRegime.UNSCALED_EULER, EULER, parse_scaling("trivial"), [100, 200],
        observable="histogram_l1_error", sieve=sieve, support=(-3.0, 3.0), bins=30,
    )
    assert all(e >= 0.0 for e in report.errors)


def test_regime_mismatch():
    with pytest.raises(ConfigurationError):
        run_convergence(LimitRegime.LINEAR_TRIVIAL, TRIVIAL, parse_scaling("trivial"), [10, 20])


def test_bad_horizons_and_observables():
    with pytest.raises(InvalidParameterError):
        run_convergence(LimitRegime.UNSCALED_TRIVIAL, TRIVIAL, parse_scaling("trivial"), [20, 10])
    with pytest.raises(InvalidParameterError):
        run_convergence(LimitRegime.UNSCALED_TRIVIAL, TRIVIAL, parse_scaling("trivial"), [1, 10])
    with pytest.raises(InvalidParameterError):
        run_convergence(LimitRegime.UNSCALED_TRIVIAL, TRIVIAL, parse_scaling("trivial"), [10], observable="bogus")
    with pytest.raises(InvalidParameterError):
        run_convergence(LimitRegime.UNSCALED_TRIVIAL, TRIVIAL, parse_scaling("trivial"), [10])


def test_convergence_report_validation():
    with pytest.raises(ValidationError):
        ConvergenceReport(regime="unscaled_trivial", observable="cdf_sup_error", horizons=[10, 20], errors=[0.1])
    with pytest.raises(ValidationError):
        ConvergenceReport(regime="unscaled_trivial", observable="cdf_sup_error", horizons=[20, 10], errors=[0.1, 0.2])


# =============================================================================
# MASSES AND AUXILIARY MEASURES
# =============================================================================

def test_mass_limits():
    assert mass_limit(TRIVIAL) == 0.5
    assert mass_limit(WeightedLogFamily(1, 3)) == pytest.approx(1 / 18)
    assert mass_limit(EULER) == pytest.approx(9 / (2 * math.pi ** 4))


def test_mass_asymptotics(sieve):
    report = mass_asymptotics(TRIVIAL, [1, 10, 1000])
    empty, small, large = report.rows
    assert empty.exact_mass == 0
    assert empty.relative_error is None
    assert small.exact_mass == 45
    assert abs(large.normalized - 0.5) < 1e-3

    euler = mass_asymptotics(EULER, [1000], sieve).rows[0]
    assert euler.relative_error < 0.01


@pytest.mark.parametrize("a,b", [(1, 2), (2, 2), (1, 3), (3, 4), (5, 5)])
def test_euler_mass_for_residue_classes(sieve, a, b):
    row = mass_asymptotics(WeightedLogFamily(a, b, WeightMode.EULER), [2000], sieve).rows[0]
    assert row.limit == pytest.approx(mass_limit(WeightedLogFamily(a, b, WeightMode.EULER)))
    assert row.relative_error < 0.01


def test_sublinear_error_terms():
    terms = sublinear_error_terms(100.0, 10_000, 3.0)
    assert terms["A2_over_psi"] == pytest.approx(0.09)
    assert terms["ratio_log_ratio"] == pytest.approx(0.01 * math.log(100))
    assert max(terms, key=terms.get) == "A3_over_psi"
    # support shorter than 3 is measured as 3
    assert sublinear_error_terms(100.0, 10_000, 1.0) == terms


def test_linearization_discrepancy_shrinks(sieve):
    bump = TestFunction.smooth_bump(1.5, 0.5)
    coarse = linearization_discrepancy(TRIVIAL, 100, bump, sieve=sieve)
    fine = linearization_discrepancy(TRIVIAL, 400, bump, sieve=sieve)
    assert fine < coarse
    with pytest.raises(InvalidParameterError):
        linearization_discrepancy(TRIVIAL, 100, TestFunction.hat(0.0, 1.0))


def test_column_mass(sieve):
    mass, ratio = column_mass_check(1, 1, 100, sieve)
    assert mass == 3004
    assert ratio == pytest.approx(1.0, abs=0.05)


def test_column_moment(sieve):
    assert column_moment(1, 1, 1000, sieve) == pytest.approx(2 / 3, abs=1 / math.sqrt(1000))
    assert column_moment(2, 3, 1001, sieve) == pytest.approx(2 / 3, abs=0.05)
    with pytest.raises(InvalidParameterError):
        column_moment(1, 3, 1001, sieve)


def test_gap_mass_ratio(sieve):
    assert gap_mass_ratio(1, 1, 2, 10_000, 100_000, sieve) == pytest.approx(1.0, abs=0.05)
    with pytest.raises(InvalidParameterError):
        gap_mass_ratio(1, 2, 3, 1000)
    with pytest.raises(InvalidParameterError):
        gap_mass_ratio(1, 1, 10, 10)


# =============================================================================
# SUITES
# =============================================================================

def test_every_preset_has_a_suite():
    assert set(ALL_SUITES) == set(SUITE_FUNCTIONS)
    assert len(ALL_SUITES) == 17


def test_quick_overrides_merge_params():
    config = get_suite("doubling_identity").resolved(quick=True)
    assert config.horizons == [50, 200]
    assert config.params["levels"] == [1, 2, 6]
    assert config.params["scalings"] == ["trivial", "linear"]
    assert get_suite("doubling_identity").resolved(quick=False).params["levels"] == [1, 2, 3, 4, 6]


def test_unknown_suite():
    with pytest.raises(InvalidParameterError):
        get_suite("nope")


@pytest.mark.parametrize("name", [
    "constants_exact",
    "doubling_identity",
    "superlinear",
    "mass",
    "sublinear",
    "linear_trivial",
    "properties",
    "perp_limit",
])
def test_quick_suite_passes(name):
    result = run_suite(name, quick=True)
    failed = [c for c in result.checks if not c.passed]
    assert result.passed, failed
    assert result.quick


def test_run_suites_report():
    report = run_suites(["superlinear", "constants_exact"], quick=True)
    assert [s.name for s in report.suites] == ["superlinear", "constants_exact"]
    assert report.passed
    assert report.failed_suites == []


def test_mass_preset_covers_residue_classes():
    full = get_suite("mass").resolved(quick=False)
    assert (5, 5) in full.params["euler_classes"]
    assert len(full.params["euler_classes"]) == 6
    assert get_suite("mass").resolved(quick=True).params["euler_classes"] == [(1, 1)]


def test_oracle_refines_every_tuple():
    full = get_suite("constants_oracle").resolved(quick=False)
    assert (full.params["refine_max_ab"], full.params["refine_max_k"]) == (5, 10)

    result = run_suite("constants_oracle", quick=True)
    names = [c.name for c in result.checks]
    assert names[0] == "product_vs_series"
    assert names[1:] == [
        "series_refines_a1_b1_k0",
        "series_refines_a1_b1_k1",
        "series_refines_a1_b2_k0",
        "series_refines_a1_b2_k1",
        "series_refines_a2_b2_k0",
        "series_refines_a2_b2_k1",
    ]
    for check in result.checks[1:]:
        assert check.values["coarse"] >= 0.0
        assert check.values["fine"] >= 0.0


def test_replay_keeps_checks_under_their_suite():
    buffer = io.StringIO()
    logger = SuiteLogger(debug=True, console=Console(file=buffer, width=200))
    for name in ("mass", "superlinear"):
        logger.replay(SuiteResult(
            name=name,
            description=f"{name} suite",
            passed=False,
            checks=[
                CheckResult(name=f"{name}_ok", passed=True, detail="fine"),
                CheckResult(name=f"{name}_bad", passed=False, detail="off"),
            ],
        ))
    out = buffer.getvalue()
    assert out.index("Suite: mass") < out.index("mass_ok") < out.index("mass_bad")
    assert out.index("mass_bad") < out.index("Suite: superlinear") < out.index("superlinear_ok")


def test_silent_worker_logger_prints_nothing():
    buffer = io.StringIO()
    worker = SuiteLogger(debug=True, console=Console(file=buffer, quiet=True))
    result = run_suite("constants_exact", quick=True, console=worker)
    assert result.passed
    assert buffer.getvalue() == ""
