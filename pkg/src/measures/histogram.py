# -----------------------------------------------------------------------------
# Histograms
#
# Left-closed right-open binning of a streamed measure. Mass outside the
# support is tallied as overflow, never dropped silently.
# -----------------------------------------------------------------------------
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from config.errors import InvalidParameterError
from config.settings import DEFAULT_BINS, DEFAULT_SUPPORT
from measures.atomic import AtomicMeasure


@dataclass(frozen=True, eq=False)
class Histogram:
    lo: float
    hi: float
    bins: int
    counts: np.ndarray       # accumulated mass per bin
    normalization: float
    overflow: float          # mass outside [lo, hi[
    total_mass: float

    @property
    def bin_width(self) -> float:
        return (self.hi - self.lo) / self.bins

    @property
    def bin_edges(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.bins + 1)

    @property
    def in_range_mass(self) -> float:
        return float(self.counts.sum())

    def density(self) -> np.ndarray:
        """counts / (normalization · bin_width)."""
        return self.counts / (self.normalization * self.bin_width)


def parse_support(text: str) -> Tuple[float, float]:
    """Parse the `lo:hi` support syntax."""
    try:
        lo_text, hi_text = text.split(":")
        lo, hi = float(lo_text), float(hi_text)
    except ValueError:
        raise InvalidParameterError(f"Support must look like lo:hi, got {text!r}") from None
    if not lo < hi:
        raise InvalidParameterError(f"Support needs lo < hi, got {lo}:{hi}")
    return lo, hi


def bin_measure(
    measure: AtomicMeasure,
    support: Optional[Tuple[float, float]] = None,
    bins: int = DEFAULT_BINS,
    normalization: float = 1.0,
) -> Histogram:
    """Bin a measure on [lo, hi[ into equal-width bins."""
    lo, hi = support if support is not None else DEFAULT_SUPPORT
    lo, hi = float(lo), float(hi)
    if not lo < hi:
        raise InvalidParameterError(f"Support needs lo < hi, got {lo}:{hi}")
    if bins < 1:
        raise InvalidParameterError(f"Need at least one bin, got {bins}")
    if not normalization > 0:
        raise InvalidParameterError(f"Normalization must be > 0, got {normalization}")

    width = (hi - lo) / bins
    counts = np.zeros(bins, dtype=np.float64)
    overflow = 0
    for block in measure.blocks():
        inside = (block.position >= lo) & (block.position < hi)
        overflow += int(block.mass[~inside].sum(dtype=np.int64))
        idx = np.floor((block.position[inside] - lo) / width).astype(np.int64)
        np.clip(idx, 0, bins - 1, out=idx)
        counts += np.bincount(idx, weights=block.mass[inside].astype(np.float64), minlength=bins)

    return Histogram(
        lo=lo,
        hi=hi,
        bins=bins,
        counts=counts,
        normalization=float(normalization),
        overflow=float(overflow),
        total_mass=float(measure.total_mass),
    )
