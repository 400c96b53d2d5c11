import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from config.errors import CapacityError, EmptyMeasureError, InvalidParameterError
from family.scaling import parse_scaling
from family.schema import IndexVariant, WeightMode, WeightedLogFamily
from measures.atomic import PairListMeasure, PositionRule, pushforward_double
from measures.builders import (
    build_column_measure,
    build_gap_measure,
    build_linearized_upper,
    build_pair_correlation,
)
from measures.histogram import bin_measure
from measures.observables import TestFunction
from measures.statistics import (
    cdf,
    cdf_grid,
    mass_at_most,
    mass_in_window,
    pair,
    sign_symmetry_defect,
)

TRIVIAL = WeightedLogFamily()
EULER = WeightedLogFamily(weight_mode=WeightMode.EULER)
UNSCALED = parse_scaling("trivial")
LINEAR = parse_scaling("linear")


def _atoms(measure):
    return sorted(measure.atoms())


def test_two_point_measure():
    measure = build_pair_correlation(TRIVIAL, 2, UNSCALED)
    assert _atoms(measure) == [(1, 2, 1), (2, 1, 1)]
    positions = np.concatenate([b.position for b in measure.blocks()])
    assert_allclose(sorted(positions), [-math.log(2), math.log(2)])
    assert measure.total_mass == 2


def test_euler_masses(sieve):
    measure = build_pair_correlation(EULER, 3, UNSCALED, sieve)
    atoms = {(m, n): mass for m, n, mass in measure.atoms()}
    assert atoms[(3, 2)] == 2
    assert atoms[(3, 1)] == 2
    assert atoms[(2, 1)] == 1
    assert measure.total_mass == sum(atoms.values())


def test_empty_measures():
    measure = build_pair_correlation(TRIVIAL, 1, UNSCALED)
    assert measure.atom_count == 0
    assert list(measure.atoms()) == []
    with pytest.raises(EmptyMeasureError):
        cdf(measure, 0.0)


def test_total_mass_matches_atoms(sieve):
    family = WeightedLogFamily(a=2, b=3, weight_mode=WeightMode.EULER)
    measure = build_pair_correlation(family, 60, LINEAR, sieve)
    assert measure.total_mass == sum(mass for _, _, mass in measure.atoms())
    assert measure.atom_count == len(list(measure.atoms()))


def test_halves(sieve):
    full = build_pair_correlation(EULER, 40, UNSCALED, sieve)
    lower = build_pair_correlation(EULER, 40, UNSCALED, sieve, half=IndexVariant.LOWER)
    upper = build_pair_correlation(EULER, 40, UNSCALED, sieve, half=IndexVariant.UPPER)
    assert lower.total_mass + upper.total_mass == full.total_mass
    assert all(m < n for m, n, _ in lower.atoms())
    assert mass_at_most(upper, 0.0) == 0


def test_block_size_does_not_change_atoms(monkeypatch, sieve):
    reference = _atoms(build_pair_correlation(EULER, 30, LINEAR, sieve))
    monkeypatch.setenv("LOGCORR_BLOCK_ATOMS", "7")
    assert _atoms(build_pair_correlation(EULER, 30, LINEAR, sieve)) == reference


def test_atom_budget(monkeypatch):
    monkeypatch.setenv("LOGCORR_ATOM_BUDGET", "100")
    with pytest.raises(CapacityError):
        build_pair_correlation(TRIVIAL, 20, UNSCALED)
    assert build_pair_correlation(TRIVIAL, 10, UNSCALED).atom_count == 90


def test_cdf_symmetry():
    measure = build_pair_correlation(TRIVIAL, 50, UNSCALED)
    assert cdf(measure, 0.0) == 0.5
    assert sign_symmetry_defect(measure) == 0


def test_cdf_close_to_limit():
    measure = build_pair_correlation(TRIVIAL, 2000, UNSCALED)
    assert cdf(measure, 1.0) == pytest.approx(0.8161, abs=5e-3)


@pytest.mark.parametrize("family", [TRIVIAL, EULER], ids=["trivial", "euler"])
def test_cdf_is_monotone_with_limits_at_infinity(family):
    measure = build_pair_correlation(family, 120, UNSCALED)
    values = cdf_grid(measure, np.linspace(-6.0, 6.0, 241))
    assert np.all(np.diff(values) >= 0.0)
    assert cdf(measure, math.inf) == 1.0
    assert cdf(measure, -math.inf) == 0.0


def test_pairing_matches_histogram_riemann_sum():
    measure = build_pair_correlation(TRIVIAL, 300, UNSCALED)
    total = measure.total_mass
    hat = TestFunction.hat(0.5, 1.0)
    histogram = bin_measure(measure, (-4.0, 4.0), 400, normalization=total)
    width = histogram.bin_width
    midpoints = histogram.bin_edges[:-1] + width / 2
    riemann = float(np.sum(histogram.counts * hat(midpoints))) / total
    # hat is 1-Lipschitz, so moving mass to bin midpoints costs at most width / 2
    assert abs(pair(measure, hat, total) - riemann) <= width


def test_cdf_grid_agrees_with_pointwise(sieve):
    measure = build_pair_correlation(EULER, 80, UNSCALED, sieve)
    grid = [1.0, -2.0, 0.0, 0.5, -0.25]
    assert_allclose(cdf_grid(measure, grid), [cdf(measure, s) for s in grid], rtol=0, atol=1e-15)


def test_mass_in_window():
    measure = build_pair_correlation(TRIVIAL, 3, UNSCALED)
    # positions ±ln 2, ±ln 3, ±ln(3/2)
    assert mass_in_window(measure, 0.0, 0.5) == 1
    assert mass_in_window(measure, -10.0, 10.0) == 6


def test_pair_with_test_function():
    measure = build_pair_correlation(TRIVIAL, 2, UNSCALED)
    f = TestFunction.hat(math.log(2), 0.5)
    assert pair(measure, f) == pytest.approx(1.0)
    assert pair(measure, lambda s: np.ones_like(s), normalizer=2.0) == pytest.approx(1.0)
    with pytest.raises(InvalidParameterError):
        pair(measure, f, normalizer=0.0)


def test_pushforward_double_keeps_atoms():
    measure = build_pair_correlation(TRIVIAL, 5, LINEAR)
    doubled = pushforward_double(measure)
    assert _atoms(doubled) == _atoms(measure)
    assert doubled.position_rule == "doubled_log"
    for original, image in zip(measure.blocks(), doubled.blocks()):
        assert_allclose(image.position, 2.0 * original.position)


def test_restrict_elements(sieve):
    measure = build_pair_correlation(EULER, 10, UNSCALED, sieve).restrict_elements(2)
    assert all(m >= 2 and n >= 2 for m, n, _ in measure.atoms())
    assert measure.atom_count == 9 * 8


def test_linearized_upper_positions(sieve):
    measure = build_linearized_upper(TRIVIAL, 6, LINEAR, sieve)
    for block in measure.blocks():
        expected = 6.0 * (block.m - block.n) / block.n
        assert_allclose(block.position, expected)
    assert measure.atom_count == 15


def test_column_measure(sieve):
    family = WeightedLogFamily(a=1, b=3, weight_mode=WeightMode.EULER)
    omega = build_column_measure(family, 10, sieve)
    assert list(omega.atoms()) == [(1, 10, 1), (4, 10, 2), (7, 10, 6)]
    positions = np.concatenate([b.position for b in omega.blocks()])
    assert_allclose(positions, [0.1, 0.4, 0.7])


def test_gap_measure(sieve):
    family = WeightedLogFamily(a=1, b=1, weight_mode=WeightMode.EULER)
    omega = build_gap_measure(family, 6, 2, LINEAR, sieve)
    # q = 1..4, events (q + 2, q)
    assert [(m, n) for m, n, _ in omega.atoms()] == [(3, 1), (4, 2), (5, 3), (6, 4)]
    assert [mass for _, _, mass in omega.atoms()] == [2, 2, 8, 4]


def test_pair_list_validation():
    with pytest.raises(InvalidParameterError):
        PairListMeasure(m=np.arange(3), n=np.arange(2), mass=np.ones(3, dtype=np.int64))
    with pytest.raises(InvalidParameterError):
        PairListMeasure(
            m=np.arange(2), n=np.arange(2), mass=np.ones(2, dtype=np.int64), rule=PositionRule.ORTHOLENGTH,
        )


def test_test_functions():
    hat = TestFunction.hat(1.0, 0.5)
    assert hat(1.0) == 1.0
    assert hat(1.25) == pytest.approx(0.5)
    assert hat(2.0) == 0.0
    bump = TestFunction.smooth_bump(0.0, 1.0)
    assert bump(0.5) == pytest.approx(0.5)
    assert hat.area == 0.5
    with pytest.raises(InvalidParameterError):
        TestFunction.hat(0.0, 0.0)
