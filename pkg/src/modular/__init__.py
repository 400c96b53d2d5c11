"""Ortholength spectra of the cusp neighbourhood in Hecke congruence quotients."""

from .perpendiculars import (
    PerpEntry,
    PerpSpectrum,
    DoublingReport,
    tangency_census,
    census_counts,
    ortholength_spectrum,
    perp_measure,
    doubling_identity_check,
)

__all__ = [
    "PerpEntry",
    "PerpSpectrum",
    "DoublingReport",
    "tangency_census",
    "census_counts",
    "ortholength_spectrum",
    "perp_measure",
    "doubling_identity_check",
]
