# -----------------------------------------------------------------------------
# Common Perpendiculars of the Cusp Neighbourhood in Γ₀[b]\H²
#
# The orbit of the horoball H_∞ = {Im z >= 1} under Γ₀[b] consists of H_∞
# and the horoballs H_{p/q} (Euclidean radius 1/(2q²)) at reduced p/q with
# q ≡ 0 (mod b). The perpendicular from H_∞ to H_{p/q} has length 2 ln q,
# and the length 2 ln q has multiplicity #{p mod q coprime to q} = φ(q).
# q = 1 gives tangent horoballs (length 0) and is not a perpendicular.
# -----------------------------------------------------------------------------
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

import numpy as np

from arith.sieve import Sieve
from config.errors import InvalidParameterError
from config.logging import get_module_logger
from family.schema import IndexVariant, ScalingSpec, WeightMode, WeightedLogFamily
from measures.atomic import AtomicMeasure, PositionRule, ProductMeasure
from measures.builders import build_pair_correlation

logger = get_module_logger("modular.perpendiculars")


@dataclass(frozen=True)
class PerpEntry:
    length: float
    q: int
    multiplicity: int


@dataclass(frozen=True)
class PerpSpectrum:
    b: int
    horizon: int
    entries: Tuple[PerpEntry, ...] = ()

    @property
    def total_multiplicity(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


# =============================================================================
# TANGENCY CENSUS
# =============================================================================

def _coprime_numerators(q: int) -> np.ndarray:
    p = np.arange(q, dtype=np.int64)
    return p[np.gcd(p, q) == 1]


def tangency_census(b: int, Q: int) -> Iterator[Tuple[Fraction, Fraction]]:
    """(p/q, 1/(2q²)) for reduced p/q ∈ [0, 1[ with q <= Q and q ≡ 0 (mod b)."""
    if b < 1:
        raise InvalidParameterError(f"Need b >= 1, got {b}")
    if Q < 2:
        raise InvalidParameterError(f"Census bound Q must be >= 2, got {Q}")
    for q in range(b, Q + 1, b):
        radius = Fraction(1, 2 * q * q)
        for p in _coprime_numerators(q).tolist():
            yield Fraction(p, q), radius


def census_counts(b: int, Q: int) -> List[Tuple[int, int]]:
    """[(q, number of horoballs H_{p/q} with p/q ∈ [0, 1[)] for admissible q."""
    return [(q, int(_coprime_numerators(q).size)) for q in range(b, Q + 1, b)]


# =============================================================================
# ORTHOLENGTH SPECTRUM
# =============================================================================

def ortholength_spectrum(b: int, N: int) -> PerpSpectrum:
    """Lengths 2 ln q (q ≡ 0 mod b, 2 <= q <= N) with multiplicities from the census."""
    if b < 1:
        raise InvalidParameterError(f"Need b >= 1, got {b}")
    if N < 2:
        raise InvalidParameterError(f"Spectrum horizon must be >= 2, got {N}")
    entries = tuple(
        PerpEntry(length=2.0 * float(np.log(q)), q=q, multiplicity=count)
        for q, count in census_counts(b, N)
        if q >= 2
    )
    return PerpSpectrum(b=b, horizon=N, entries=entries)


def perp_measure(b: int, N: int, scaling: ScalingSpec) -> ProductMeasure:
    """Σ ω(ℓ)ω(ℓ') Δ_{ψ(N)(ℓ - ℓ')} over ordered pairs of distinct lengths."""
    spectrum = ortholength_spectrum(b, N)
    return ProductMeasure(
        elements=np.array([e.q for e in spectrum.entries], dtype=np.int64),
        weights=np.array([e.multiplicity for e in spectrum.entries], dtype=np.int64),
        rule=PositionRule.ORTHOLENGTH,
        scale=scaling.psi(N),
        half=IndexVariant.FULL,
        horizon=N,
        coordinates=np.array([e.length for e in spectrum.entries], dtype=np.float64),
        label=f"perp[b={b},{scaling.label()},N={N}]",
    )


# =============================================================================
# DOUBLING IDENTITY
# =============================================================================

@dataclass
class DoublingReport:
    b: int
    N: int
    scaling: str
    equal: bool
    atoms_compared: int = 0
    first_mismatch: Optional[dict] = None
    max_position_gap: float = 0.0
    notes: List[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "b": self.b,
            "N": self.N,
            "scaling": self.scaling,
            "equal": self.equal,
            "atoms_compared": self.atoms_compared,
            "first_mismatch": self.first_mismatch,
            "max_position_gap": self.max_position_gap,
            "notes": list(self.notes),
        }


def _first_difference(left: AtomicMeasure, right: AtomicMeasure) -> Tuple[int, Optional[dict], float]:
    compared = 0
    gap = 0.0
    for lb, rb in zip(left.blocks(), right.blocks()):
        same = (lb.m == rb.m) & (lb.n == rb.n) & (lb.mass == rb.mass)
        if not same.all():
            i = int(np.argmin(same))
            return compared + i, {
                "index": compared + i,
                "perpendicular": [int(lb.m[i]), int(lb.n[i]), int(lb.mass[i])],
                "doubled_log": [int(rb.m[i]), int(rb.n[i]), int(rb.mass[i])],
            }, gap
        if lb.position.size:
            gap = max(gap, float(np.max(np.abs(lb.position - rb.position))))
        compared += len(lb)
    return compared, None, gap


def doubling_identity_check(b: int, N: int, scaling: ScalingSpec, sieve: Optional[Sieve] = None) -> DoublingReport:
    """Compare the perpendicular measure with the doubled Euler-weighted log measure of 0 mod b.

    Events and masses must agree exactly, atom by atom. For b = 1 the log
    family contains n = 1 (ln 1 = 0), which has no perpendicular, so atoms
    touching it are left out of the comparison.
    """
    report = DoublingReport(b=b, N=N, scaling=scaling.label(), equal=False)
    perp = perp_measure(b, N, scaling)
    family = WeightedLogFamily(a=b, b=b, weight_mode=WeightMode.EULER)
    logs = build_pair_correlation(family, N, scaling, sieve=sieve)
    if b == 1:
        logs = logs.restrict_elements(2)
        report.notes.append("n = 1 excluded: H_0 is tangent to H_inf")
    doubled = logs.pushforward_double()

    if perp.atom_count != doubled.atom_count or perp.total_mass != doubled.total_mass:
        report.first_mismatch = {
            "atom_count": [perp.atom_count, doubled.atom_count],
            "total_mass": [perp.total_mass, doubled.total_mass],
        }
        logger.info(f"doubling identity b={b} N={N}: size mismatch")
        return report

    compared, mismatch, gap = _first_difference(perp, doubled)
    report.atoms_compared = compared
    report.max_position_gap = gap
    report.first_mismatch = mismatch
    report.equal = mismatch is None
    logger.debug(f"doubling identity b={b} N={N} {scaling.label()}: equal={report.equal}, atoms={compared}")
    return report
