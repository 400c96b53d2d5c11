import math
from collections import Counter
from fractions import Fraction

import pytest

from arith.sums import mertens_congruence_sum
from config.errors import InvalidParameterError
from family.scaling import parse_scaling
from modular.perpendiculars import (
    census_counts,
    doubling_identity_check,
    ortholength_spectrum,
    perp_measure,
    tangency_census,
)


def test_spectrum_level_one():
    spectrum = ortholength_spectrum(1, 5)
    assert [e.q for e in spectrum.entries] == [2, 3, 4, 5]
    assert [e.multiplicity for e in spectrum.entries] == [1, 2, 2, 4]
    assert spectrum.entries[0].length == pytest.approx(2 * math.log(2))
    assert spectrum.total_multiplicity == 9


def test_spectrum_level_three():
    spectrum = ortholength_spectrum(3, 5)
    assert [(e.q, e.multiplicity) for e in spectrum.entries] == [(3, 2)]


def test_census():
    assert census_counts(1, 6)[-1] == (6, 2)
    entries = list(tangency_census(2, 4))
    assert (Fraction(1, 2), Fraction(1, 8)) in entries
    assert (Fraction(1, 4), Fraction(1, 32)) in entries
    assert all(r == Fraction(1, 2 * f.denominator ** 2) for f, r in entries)
    with pytest.raises(InvalidParameterError):
        list(tangency_census(1, 1))


@pytest.mark.parametrize("b", [1, 2, 3, 4, 6])
def test_spectrum_mass_is_congruence_totient_sum(sieve, b):
    N = 500
    spectrum = ortholength_spectrum(b, N)
    # q = 1 is a tangency, not a perpendicular
    assert spectrum.total_multiplicity == mertens_congruence_sum(N, b, b, sieve) - (1 if b == 1 else 0)


@pytest.mark.parametrize("b", [1, 2, 3, 5])
def test_census_count_is_totient(sieve, b):
    Q = 60
    per_denominator = Counter(f.denominator for f, _ in tangency_census(b, Q))
    assert per_denominator == {q: int(sieve.phi[q]) for q in range(b, Q + 1, b)}
    assert census_counts(b, Q) == [(q, int(sieve.phi[q])) for q in range(b, Q + 1, b)]


def test_spectrum_validation():
    with pytest.raises(InvalidParameterError):
        ortholength_spectrum(0, 10)
    with pytest.raises(InvalidParameterError):
        ortholength_spectrum(1, 1)


def test_perp_measure_masses():
    measure = perp_measure(1, 5, parse_scaling("trivial"))
    assert measure.total_mass == 9 * 9 - (1 + 4 + 4 + 16)


@pytest.mark.parametrize("b, N, scaling", [
    (1, 50, "trivial"),
    (4, 100, "linear"),
    (3, 60, "power:0.5"),
    (1, 2, "trivial"),
])
def test_doubling_identity(b, N, scaling, sieve):
    report = doubling_identity_check(b, N, parse_scaling(scaling), sieve)
    assert report.equal, report.first_mismatch
    assert report.first_mismatch is None
    assert report.max_position_gap < 1e-9 * max(1.0, N)


def test_doubling_report_notes_level_one(sieve):
    report = doubling_identity_check(1, 20, parse_scaling("trivial"), sieve)
    assert report.notes
    assert report.as_dict()["equal"] is True
    assert doubling_identity_check(2, 20, parse_scaling("trivial"), sieve).notes == []
