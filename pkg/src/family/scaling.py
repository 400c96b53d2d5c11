# -----------------------------------------------------------------------------
# Scaling Parsing and Regime Classification
#
# λ_ψ = lim ψ(N)/N decides which limit a pair correlation measure has:
# zero (Poissonian constant), finite (level repulsion) or infinite (mass
# escapes to infinity).
# -----------------------------------------------------------------------------
import math
from typing import Optional

import numpy as np

from config.errors import EmptyMeasureError, InvalidParameterError
from family.schema import (
    NormalizerKind,
    RegimeClassification,
    RegimeKind,
    ScalingKind,
    ScalingSpec,
    WeightedLogFamily,
)

SCALING_SYNTAX = "trivial, power:ALPHA, linear, invavg"


def parse_scaling(text: str, normalizer: Optional[str] = None) -> ScalingSpec:
    """Parse `trivial | power:ALPHA | linear | invavg`."""
    raw = (text or "").strip().lower()
    norm = None
    if normalizer not in (None, "", "auto"):
        try:
            norm = NormalizerKind(normalizer)
        except ValueError:
            available = ", ".join(k.value for k in NormalizerKind)
            raise InvalidParameterError(
                f"Unknown normalizer: {normalizer}. Available: auto, {available}"
            ) from None
    if raw == "trivial":
        return ScalingSpec(ScalingKind.TRIVIAL, normalizer=norm)
    if raw == "linear":
        return ScalingSpec(ScalingKind.LINEAR, normalizer=norm)
    if raw in ("invavg", "inverse_average_gap"):
        return ScalingSpec(ScalingKind.INVERSE_AVERAGE_GAP, normalizer=norm)
    if raw.startswith("power:"):
        try:
            alpha = float(raw.split(":", 1)[1])
        except ValueError:
            raise InvalidParameterError(f"Bad power exponent in scaling: {text}") from None
        return ScalingSpec(ScalingKind.POWER, alpha=alpha, normalizer=norm)
    raise InvalidParameterError(f"Unknown scaling: {text}. Available: {SCALING_SYNTAX}")


# -----------------------------------------------------------------------------
# classify_regime - zero / finite(λ) / infinite
#
# Built-in kinds are classified exactly. Custom tables are classified
# from the log-log slope of their tail and flagged as heuristic.
# -----------------------------------------------------------------------------
def classify_regime(spec: ScalingSpec, N: Optional[int] = None) -> RegimeClassification:
    if spec.kind in (ScalingKind.TRIVIAL, ScalingKind.INVERSE_AVERAGE_GAP):
        return RegimeClassification(RegimeKind.ZERO, lam=0.0)
    if spec.kind == ScalingKind.LINEAR:
        return RegimeClassification(RegimeKind.FINITE, lam=1.0)
    if spec.kind == ScalingKind.POWER:
        if spec.alpha < 1:
            return RegimeClassification(RegimeKind.ZERO, lam=0.0)
        if spec.alpha == 1:
            return RegimeClassification(RegimeKind.FINITE, lam=1.0)
        return RegimeClassification(RegimeKind.INFINITE)
    return _classify_table(spec, N)


def _classify_table(spec: ScalingSpec, N: Optional[int]) -> RegimeClassification:
    rows = [(n, v) for n, v in spec.table if N is None or n <= N]
    if len(rows) < 3:
        return RegimeClassification(RegimeKind.UNCLASSIFIED, heuristic=True)
    tail = rows[len(rows) // 2:] if len(rows) >= 6 else rows
    horizons = np.array([n for n, _ in tail], dtype=np.float64)
    values = np.array([v for _, v in tail], dtype=np.float64)
    if horizons[-1] <= horizons[0]:
        return RegimeClassification(RegimeKind.UNCLASSIFIED, heuristic=True)

    slope = float(np.polyfit(np.log(horizons), np.log(values), 1)[0])
    ratios = values / horizons
    if slope < 0.9:
        return RegimeClassification(RegimeKind.ZERO, lam=0.0, heuristic=True)
    if slope > 1.1:
        return RegimeClassification(RegimeKind.INFINITE, heuristic=True)
    spread = float(ratios.max() - ratios.min()) / float(ratios[-1])
    if spread <= 0.05:
        return RegimeClassification(RegimeKind.FINITE, lam=float(ratios[-1]), heuristic=True)
    return RegimeClassification(RegimeKind.UNCLASSIFIED, heuristic=True)


# =============================================================================
# NORMALIZERS
# =============================================================================

def natural_normalizer(family: WeightedLogFamily, spec: ScalingSpec) -> NormalizerKind:
    """Normalizer under which the regime has a nontrivial limit."""
    if spec.normalizer is not None:
        return spec.normalizer
    if spec.kind == ScalingKind.TRIVIAL:
        return NormalizerKind.PROBABILITY
    regime = classify_regime(spec)
    if regime.kind == RegimeKind.ZERO:
        return NormalizerKind.QUADRATIC
    if regime.kind == RegimeKind.FINITE and family.is_euler:
        return NormalizerKind.CUBIC
    return NormalizerKind.SCALE


def normalizer_value(
    kind: NormalizerKind,
    spec: ScalingSpec,
    N: int,
    total_mass: Optional[float] = None,
) -> float:
    """Value of ψ′(N) for the given normalizer kind."""
    kind = NormalizerKind(kind)
    if kind == NormalizerKind.PROBABILITY:
        if not total_mass:
            raise EmptyMeasureError(f"Probability normalization needs positive mass (N = {N})")
        return float(total_mass)
    if kind == NormalizerKind.QUADRATIC:
        return float(N) * float(N) / spec.psi(N)
    if kind == NormalizerKind.SCALE:
        return spec.psi(N)
    if kind == NormalizerKind.CUBIC:
        return float(N) ** 3
    lookup = dict(spec.normalizer_table)
    if N not in lookup:
        raise InvalidParameterError(f"Explicit normalizer is not tabulated at N = {N}")
    return lookup[N]


def min_positive_position(spec: ScalingSpec, N: int, a: int = 1, b: int = 1) -> float:
    """Smallest positive atom position ψ(N)·ln(n/(n-b)) of the family at horizon N."""
    first = (a - 1) % b + 1
    top = first + ((N - first) // b) * b if N >= first else 0
    if top - b < first:
        return math.inf
    return spec.psi(N) * math.log(top / (top - b))
