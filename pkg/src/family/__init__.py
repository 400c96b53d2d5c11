"""Weighted logarithm families, scaling specifications and index sets."""

from .schema import (
    WeightMode,
    WeightedLogFamily,
    ScalingKind,
    ScalingSpec,
    NormalizerKind,
    RegimeKind,
    RegimeClassification,
    IndexVariant,
    IndexSet,
)
from .scaling import (
    SCALING_SYNTAX,
    parse_scaling,
    classify_regime,
    natural_normalizer,
    normalizer_value,
    min_positive_position,
)
from .index_sets import (
    residues,
    residue_count,
    index_set_size,
    enumerate_pairs,
)

__all__ = [
    # Types
    "WeightMode",
    "WeightedLogFamily",
    "ScalingKind",
    "ScalingSpec",
    "NormalizerKind",
    "RegimeKind",
    "RegimeClassification",
    "IndexVariant",
    "IndexSet",
    # Scaling
    "SCALING_SYNTAX",
    "parse_scaling",
    "classify_regime",
    "natural_normalizer",
    "normalizer_value",
    "min_positive_position",
    # Index sets
    "residues",
    "residue_count",
    "index_set_size",
    "enumerate_pairs",
]
