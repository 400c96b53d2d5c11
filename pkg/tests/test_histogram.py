import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_equal

from config.errors import InvalidParameterError
from family.scaling import parse_scaling
from family.schema import WeightedLogFamily
from measures.atomic import PairListMeasure, PositionRule
from measures.builders import build_pair_correlation
from measures.histogram import bin_measure, parse_support


def _single_atom(position_ratio: float, mass: int) -> PairListMeasure:
    # RATIO positions are m / n
    m = np.array([int(position_ratio * 1000)], dtype=np.int64)
    n = np.array([1000], dtype=np.int64)
    return PairListMeasure(m=m, n=n, mass=np.array([mass], dtype=np.int64), rule=PositionRule.RATIO)


def test_single_atom_lands_in_its_bin():
    # support [0, 10[ with 10 bins: the midpoint of bin 3 is 3.5
    histogram = bin_measure(_single_atom(3.5, 2), support=(0.0, 10.0), bins=10)
    expected = np.zeros(10)
    expected[3] = 2.0
    assert_equal(histogram.counts, expected)
    assert histogram.overflow == 0.0


def test_left_closed_right_open():
    inside = bin_measure(_single_atom(0.0, 1), support=(0.0, 1.0), bins=4)
    assert inside.counts[0] == 1.0
    edge = bin_measure(_single_atom(1.0, 1), support=(0.0, 1.0), bins=4)
    assert edge.in_range_mass == 0.0
    assert edge.overflow == 1.0


def test_mass_is_conserved():
    measure = build_pair_correlation(WeightedLogFamily(), 200, parse_scaling("trivial"))
    histogram = bin_measure(measure, support=(-2.0, 2.0), bins=37)
    assert histogram.in_range_mass + histogram.overflow == measure.total_mass
    assert histogram.total_mass == measure.total_mass


def test_density_normalization():
    measure = build_pair_correlation(WeightedLogFamily(), 100, parse_scaling("trivial"))
    histogram = bin_measure(measure, support=(-10.0, 10.0), bins=50, normalization=measure.total_mass)
    assert_allclose(np.sum(histogram.density()) * histogram.bin_width, 1.0)
    assert_allclose(histogram.bin_edges[[0, -1]], [-10.0, 10.0])


def test_parse_support():
    assert parse_support("-4:4") == (-4.0, 4.0)
    assert parse_support("1:4.5") == (1.0, 4.5)
    for bad in ("4:1", "1:1", "x:2", "1"):
        with pytest.raises(InvalidParameterError):
            parse_support(bad)


def test_bad_binning():
    measure = _single_atom(1.0, 1)
    with pytest.raises(InvalidParameterError):
        bin_measure(measure, support=(0.0, 1.0), bins=0)
    with pytest.raises(InvalidParameterError):
        bin_measure(measure, support=(0.0, 1.0), normalization=0.0)
