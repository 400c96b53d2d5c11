# -----------------------------------------------------------------------------
# Measure Statistics
#
# Streaming cumulative distribution functions and pairings with test
# functions. Masses are summed exactly in integers; pairings use
# compensated summation in enumeration order.
# -----------------------------------------------------------------------------
from typing import Callable, Sequence, Union

import numpy as np

from arith.summation import CompensatedSum
from config.errors import EmptyMeasureError, InvalidParameterError
from measures.atomic import AtomicMeasure
from measures.observables import TestFunction

Observable = Union[TestFunction, Callable[[np.ndarray], np.ndarray]]


def _require_mass(measure: AtomicMeasure) -> int:
    total = measure.total_mass
    if total <= 0:
        raise EmptyMeasureError(f"Measure {measure.label or '<unnamed>'} has zero total mass")
    return total


def mass_at_most(measure: AtomicMeasure, s: float) -> int:
    """Exact Σ mass over atoms with position <= s."""
    total = 0
    for block in measure.blocks():
        total += int(block.mass[block.position <= s].sum(dtype=np.int64))
    return total


def mass_in_window(measure: AtomicMeasure, lo: float, hi: float) -> int:
    """Exact Σ mass over atoms with lo <= position <= hi."""
    total = 0
    for block in measure.blocks():
        inside = (block.position >= lo) & (block.position <= hi)
        total += int(block.mass[inside].sum(dtype=np.int64))
    return total


def cdf(measure: AtomicMeasure, s: float) -> float:
    """(Σ_{position <= s} mass) / total_mass, right-continuous."""
    total = _require_mass(measure)
    return mass_at_most(measure, s) / total


def cdf_grid(measure: AtomicMeasure, grid: Sequence[float]) -> np.ndarray:
    """cdf at every grid point in a single pass over the atoms."""
    total = _require_mass(measure)
    points = np.asarray(grid, dtype=np.float64)
    order = np.argsort(points, kind="stable")
    sorted_points = points[order]
    below = [0] * points.size
    for block in measure.blocks():
        idx = np.argsort(block.position, kind="stable")
        positions = block.position[idx]
        running = np.cumsum(block.mass[idx], dtype=np.int64)
        cut = np.searchsorted(positions, sorted_points, side="right")
        for slot, c in enumerate(cut.tolist()):
            if c:
                below[slot] += int(running[c - 1])
    result = np.empty(points.size, dtype=np.float64)
    result[order] = np.array(below, dtype=np.float64) / total
    return result


def pair(measure: AtomicMeasure, f: Observable, normalizer: float = 1.0) -> float:
    """(Σ mass · f(position)) / normalizer."""
    if not normalizer > 0:
        raise InvalidParameterError(f"Normalizer must be > 0, got {normalizer}")
    acc = CompensatedSum()
    for block in measure.blocks():
        values = np.asarray(f(block.position), dtype=np.float64)
        acc.extend(block.mass.astype(np.float64) * values)
    return acc.total / normalizer


def sign_symmetry_defect(measure: AtomicMeasure) -> int:
    """Number of atoms breaking the sg-symmetry; 0 when R restricted to ]-∞,0[ is sg_* of R on ]0,∞[.

    Compares the multiset of (position, mass) on the positive side with
    the negated negative side exactly, no tolerance.
    """
    positive, negative = [], []
    for block in measure.blocks():
        pos_mask = block.position > 0
        neg_mask = block.position < 0
        positive.append(np.stack([block.position[pos_mask], block.mass[pos_mask].astype(np.float64)], axis=1))
        negative.append(np.stack([-block.position[neg_mask], block.mass[neg_mask].astype(np.float64)], axis=1))
    if not positive:
        return 0
    pos = np.concatenate(positive)
    neg = np.concatenate(negative)
    if pos.shape != neg.shape:
        return abs(pos.shape[0] - neg.shape[0]) or 1
    pos = pos[np.lexsort((pos[:, 1], pos[:, 0]))]
    neg = neg[np.lexsort((neg[:, 1], neg[:, 0]))]
    return int(np.count_nonzero(np.any(pos != neg, axis=1)))
