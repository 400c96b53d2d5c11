# -----------------------------------------------------------------------------
# Measure Builders
#
# Pair correlation measures of weighted logarithm families and the
# auxiliary measures μ_N⁺, ω_q and ω_{p,N}.
# -----------------------------------------------------------------------------
from typing import Optional

import numpy as np

from arith.sieve import Sieve, shared_sieve
from config.errors import CapacityError, InvalidParameterError
from config.logging import get_module_logger
from config.settings import get_atom_budget
from family.index_sets import gap_top_index, residues
from family.schema import IndexSet, IndexVariant, ScalingSpec, WeightedLogFamily
from measures.atomic import PairListMeasure, PositionRule, ProductMeasure

logger = get_module_logger("measures.builders")


# -----------------------------------------------------------------------------
# family_weights - 1 or φ(n) for every element
# -----------------------------------------------------------------------------
def family_weights(
    family: WeightedLogFamily,
    elements: np.ndarray,
    sieve: Optional[Sieve] = None,
) -> np.ndarray:
    if not family.is_euler:
        return np.ones(elements.size, dtype=np.int64)
    if elements.size == 0:
        return np.zeros(0, dtype=np.int64)
    top = int(elements.max())
    if sieve is None:
        sieve = shared_sieve(top)
    sieve.require(top, "family element")
    return sieve.phi[elements].astype(np.int64)


def _check_budget(count: int, budget: Optional[int]) -> None:
    budget = get_atom_budget() if budget is None else budget
    if count > budget:
        raise CapacityError(
            f"Measure has {count} atoms, above the budget of {budget} (LOGCORR_ATOM_BUDGET)"
        )


def _label(family: WeightedLogFamily, N: int, scaling: ScalingSpec, what: str) -> str:
    return f"{what}[a={family.a},b={family.b},{family.weight_mode.value},{scaling.label()},N={N}]"


# =============================================================================
# PAIR CORRELATION MEASURES
# =============================================================================

def build_pair_correlation(
    family: WeightedLogFamily,
    N: int,
    scaling: ScalingSpec,
    sieve: Optional[Sieve] = None,
    half: IndexVariant = IndexVariant.FULL,
    budget: Optional[int] = None,
) -> ProductMeasure:
    """Σ_{(m,n) ∈ I_N} w(m)w(n) Δ_{ψ(N)(ln m - ln n)}.

    Args:
        family: residue class and weight mode
        N: horizon, at least 1
        scaling: ψ and its normalizer
        sieve: totients for Euler weights (a shared sieve is used when None)
        half: FULL for I_N, LOWER for I_N⁻ (m < n), UPPER for I_N⁺ (m > n)
        budget: maximum atom count (configured default when None)

    Raises:
        CapacityError: more atoms than the budget, or a sieve too small for N
    """
    if N < 1:
        raise InvalidParameterError(f"Horizon N must be >= 1, got {N}")
    elements = residues(N, family.a, family.b)
    measure = ProductMeasure(
        elements=elements,
        weights=family_weights(family, elements, sieve),
        rule=PositionRule.LOG_DIFF,
        scale=scaling.psi(N),
        half=IndexVariant(half),
        horizon=N,
        label=_label(family, N, scaling, "R"),
    )
    _check_budget(measure.atom_count, budget)
    logger.debug(f"Built {measure.label} with {measure.atom_count} atoms")
    return measure


def build_linearized_upper(
    family: WeightedLogFamily,
    N: int,
    scaling: ScalingSpec,
    sieve: Optional[Sieve] = None,
    budget: Optional[int] = None,
) -> ProductMeasure:
    """μ_N⁺ = Σ_{q < q+p <= N} w(q)w(q+p) Δ_{ψ(N)p/q}, the first-order model of R_N on ]0, ∞[."""
    if N < 1:
        raise InvalidParameterError(f"Horizon N must be >= 1, got {N}")
    elements = residues(N, family.a, family.b)
    measure = ProductMeasure(
        elements=elements,
        weights=family_weights(family, elements, sieve),
        rule=PositionRule.LINEARIZED,
        scale=scaling.psi(N),
        half=IndexVariant.UPPER,
        horizon=N,
        label=_label(family, N, scaling, "mu+"),
    )
    _check_budget(measure.atom_count, budget)
    return measure


# =============================================================================
# COLUMN AND GAP MEASURES
# =============================================================================

def build_column_measure(
    family: WeightedLogFamily,
    q: int,
    sieve: Optional[Sieve] = None,
) -> PairListMeasure:
    """ω_q = Σ_{p ∈ J_q} w(p) Δ_{p/q} on [0, 1]."""
    index_set = IndexSet(N=max(q, 1), a=family.a, b=family.b, variant=IndexVariant.COLUMN, parameter=q)
    p = np.arange(index_set.a, q, index_set.b, dtype=np.int64)
    n = np.full(p.size, q, dtype=np.int64)
    return PairListMeasure(
        m=p,
        n=n,
        mass=family_weights(family, p, sieve),
        rule=PositionRule.RATIO,
        horizon=q,
        label=f"omega[q={q},a={family.a},b={family.b},{family.weight_mode.value}]",
    )


def build_gap_measure(
    family: WeightedLogFamily,
    N: int,
    p: int,
    scaling: ScalingSpec,
    sieve: Optional[Sieve] = None,
) -> PairListMeasure:
    """ω_{p,N} = Σ_{q ∈ J_{p,N}} w(q)w(q+p) Δ_{ψ(N)p/q}."""
    index_set = IndexSet(N=N, a=family.a, b=family.b, variant=IndexVariant.GAP, parameter=p)
    top = gap_top_index(index_set)
    q = index_set.a + index_set.b * np.arange(max(top + 1, 0), dtype=np.int64)
    upper = q + p
    if family.is_euler and q.size:
        if sieve is None:
            sieve = shared_sieve(int(upper.max()))
        sieve.require(int(upper.max()), "family element")
        mass = sieve.phi[q] * sieve.phi[upper]
    else:
        mass = np.ones(q.size, dtype=np.int64)
    return PairListMeasure(
        m=upper,
        n=q,
        mass=mass.astype(np.int64),
        rule=PositionRule.LINEARIZED,
        scale=scaling.psi(N),
        horizon=N,
        label=f"omega[p={p},N={N},a={family.a},b={family.b},{family.weight_mode.value}]",
    )
