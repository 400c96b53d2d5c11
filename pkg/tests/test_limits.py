import math

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy import integrate as sp_integrate

from config.errors import ConfigurationError, InvalidParameterError
from family.scaling import parse_scaling
from family.schema import WeightMode, WeightedLogFamily
from limits.densities import (
    LimitDensity,
    LimitRegime,
    doubled,
    g_linear_euler,
    g_linear_trivial,
    g_sublinear_trivial,
    g_unscaled_euler,
    g_unscaled_trivial,
    limit_cdf_euler,
    limit_cdf_trivial,
    limit_for,
    theta_N,
    theta_N_threshold,
)
from limits.integrals import bin_averages, hat_exponential_integral, integrate, interval_integral
from measures.observables import TestFunction

P = 100_000
TRIVIAL = WeightedLogFamily()
EULER = WeightedLogFamily(weight_mode=WeightMode.EULER)


def test_pointwise_values():
    assert g_unscaled_trivial(1.0) == pytest.approx(math.exp(-1) / 2)
    assert g_unscaled_euler(-0.5) == pytest.approx(math.exp(-1))
    assert g_sublinear_trivial(1) == 0.5
    assert g_sublinear_trivial(2) == 0.125


def test_linear_trivial_repulsion():
    assert g_linear_trivial(1.5, 1, 1.0) == pytest.approx(4 / 9)
    assert g_linear_trivial(0.99, 1, 1.0) == 0.0
    assert g_linear_trivial(-1.5, 1, 1.0) == pytest.approx(4 / 9)
    assert g_linear_trivial(2.5, 2, 1.0) == pytest.approx(2 / (2 * 6.25))
    with pytest.raises(InvalidParameterError):
        g_linear_trivial(1.0, 1, 0.0)


def test_theta_n_tends_to_theta_infinity():
    N = 10 ** 6
    assert theta_N(1.5, N, 1, float(N)) == pytest.approx(4 / 9, abs=1e-5)
    assert theta_N(0.5, 100, 1, 100.0) == 0.0
    assert theta_N_threshold(101, 1, 100.0) == 1.0
    with pytest.raises(InvalidParameterError):
        theta_N(-1.0, 100, 1, 100.0)


@pytest.mark.parametrize("b", [1, 2])
def test_theta_n_close_to_theta_infinity_across_t(b):
    N = 10 ** 6
    ts = np.array([0.3, 1.5, 2.7, 9.9])
    worst = np.max(np.abs(theta_N(ts, N, b, float(N)) - g_linear_trivial(ts, b, 1.0)))
    assert worst <= 1e-12


@pytest.mark.parametrize("s", [-2.0, -0.5, 0.5, 2.0])
def test_limit_cdfs_differentiate_to_densities(s):
    h = 1e-4
    trivial_slope = (limit_cdf_trivial(s + h) - limit_cdf_trivial(s - h)) / (2 * h)
    euler_slope = (limit_cdf_euler(s + h) - limit_cdf_euler(s - h)) / (2 * h)
    assert trivial_slope == pytest.approx(g_unscaled_trivial(s), rel=1e-6)
    assert euler_slope == pytest.approx(g_unscaled_euler(s), rel=1e-6)


def test_linear_euler_value():
    assert g_linear_euler(1.5, 1, 1, P) == pytest.approx(0.0637, abs=1e-4)
    assert g_linear_euler(0.5, 1, 1, P) == 0.0
    # b = 2: zero below 2
    assert g_linear_euler(1.5, 1, 2, P) == 0.0


def test_linear_euler_tends_to_asymptote():
    s = np.array([1000.0, -1000.0])
    assert_allclose(g_linear_euler(s, 1, 1, P), 9 / math.pi ** 4, rtol=0.01)


def test_limit_cdfs():
    assert limit_cdf_trivial(1.0) == pytest.approx(0.81606, abs=1e-5)
    assert limit_cdf_trivial(0.0) == 0.5
    assert limit_cdf_euler(0.0) == 0.5
    assert limit_cdf_euler(-1.0) == pytest.approx(0.5 * math.exp(-2))


@pytest.mark.parametrize("family, text, regime", [
    (TRIVIAL, "trivial", LimitRegime.UNSCALED_TRIVIAL),
    (TRIVIAL, "power:0.5", LimitRegime.SUBLINEAR_TRIVIAL),
    (TRIVIAL, "invavg", LimitRegime.SUBLINEAR_TRIVIAL),
    (TRIVIAL, "linear", LimitRegime.LINEAR_TRIVIAL),
    (TRIVIAL, "power:1.5", LimitRegime.SUPERLINEAR_ZERO),
    (EULER, "trivial", LimitRegime.UNSCALED_EULER),
    (EULER, "linear", LimitRegime.LINEAR_EULER),
])
def test_limit_for(family, text, regime):
    assert limit_for(family, parse_scaling(text)).regime == regime


def test_euler_sublinear_has_no_limit():
    with pytest.raises(ConfigurationError):
        limit_for(EULER, parse_scaling("power:0.5"))


def test_density_object():
    density = LimitDensity(LimitRegime.LINEAR_TRIVIAL, b=2, lam=1.0)
    assert density.repulsion_radius == 2.0
    assert density.jumps(-5.0, 5.0) == [-4.0, -2.0, 2.0, 4.0]
    with pytest.raises(ConfigurationError):
        density.cdf(0.0)


def test_doubled_density():
    density = LimitDensity(LimitRegime.UNSCALED_TRIVIAL)
    twice = doubled(density)
    assert twice(2.0) == pytest.approx(density(1.0) / 2)
    assert twice.cdf(2.0) == pytest.approx(density.cdf(1.0))
    linear = doubled(LimitDensity(LimitRegime.LINEAR_TRIVIAL))
    assert linear.repulsion_radius == 2.0


def test_hat_against_exponential():
    density = LimitDensity(LimitRegime.UNSCALED_TRIVIAL)
    assert integrate(density, TestFunction.hat(0.0, 1.0)) == pytest.approx(math.exp(-1), rel=1e-12)


def test_closed_form_matches_quadrature():
    f = TestFunction.hat(0.3, 0.8)
    closed = hat_exponential_integral(f, 1.0, 2.0)
    numeric, _ = sp_integrate.quad(lambda s: f(s) * math.exp(-2 * abs(s)), -0.5, 1.1, points=[0.0, 0.3])
    assert closed == pytest.approx(numeric, rel=1e-7)


def test_constant_density_integral():
    density = LimitDensity(LimitRegime.SUBLINEAR_TRIVIAL, b=1)
    assert integrate(density, TestFunction.hat(2.0, 1.0)) == pytest.approx(0.5)
    assert interval_integral(density, 0.0, 4.0) == pytest.approx(2.0)


def test_interval_integral_uses_cdf():
    density = LimitDensity(LimitRegime.UNSCALED_TRIVIAL)
    assert interval_integral(density, -math.inf, math.inf) == pytest.approx(1.0)
    assert interval_integral(density, 0.0, 1.0) == pytest.approx(0.5 * (1 - math.exp(-1)))


def test_bin_averages_linear_trivial():
    density = LimitDensity(LimitRegime.LINEAR_TRIVIAL)
    edges = np.array([0.0, 0.5, 1.0, 2.0])
    averages = bin_averages(density, edges)
    assert averages[0] == 0.0
    assert averages[1] == 0.0
    # on [1, 2[ the density is 1/t²
    assert averages[2] == pytest.approx(0.5, rel=1e-8)
