# -----------------------------------------------------------------------------
# Atomic Measures
#
# Finite sums of weighted Dirac masses whose atoms are exact integer
# events (m, n). Real positions are derived on demand, block by block,
# so large measures are streamed instead of materialised.
#
# Two layouts share one interface:
#   ProductMeasure - atoms (m, n) over a residue array, mass w(m)·w(n)
#   PairListMeasure - explicit arrays of (m, n, mass)
# -----------------------------------------------------------------------------
from abc import ABC, abstractmethod
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterator, Optional, Tuple

import numpy as np

from config.errors import InvalidParameterError
from config.settings import get_block_atoms
from family.schema import IndexVariant


# -----------------------------------------------------------------------------
# Position Rule
# How an event (m, n) is mapped to a real number before dilation
# -----------------------------------------------------------------------------
class PositionRule(str, Enum):
    LOG_DIFF = "log_diff"        # ψ(N)(ln m - ln n)
    RATIO = "ratio"              # m / n
    LINEARIZED = "linearized"    # ψ(N)(m/n - 1)
    ORTHOLENGTH = "ortholength"  # ψ(N)(ℓ_m - ℓ_n) from supplied coordinates


@dataclass(frozen=True)
class AtomBlock:
    """A contiguous run of atoms in enumeration order."""
    m: np.ndarray
    n: np.ndarray
    mass: np.ndarray
    position: np.ndarray

    def __len__(self) -> int:
        return int(self.m.size)


class AtomicMeasure(ABC):
    """Common interface of the measure layouts."""

    rule: PositionRule
    scale: float
    dilation: float
    horizon: int
    label: str

    # -------------------------------------------------------------------------
    # layout hooks
    # -------------------------------------------------------------------------
    @abstractmethod
    def _event_blocks(self) -> Iterator[Tuple[np.ndarray, np.ndarray, np.ndarray, Optional[np.ndarray]]]:
        """Yield (m, n, mass, coordinate_difference or None) blocks."""

    @property
    @abstractmethod
    def atom_count(self) -> int:
        ...

    @property
    @abstractmethod
    def total_mass(self) -> int:
        """Exact Σ mass."""

    @abstractmethod
    def restrict_elements(self, min_element: int) -> "AtomicMeasure":
        """Drop every atom with m or n below min_element."""

    @abstractmethod
    def _with_dilation(self, dilation: float) -> "AtomicMeasure":
        ...

    # -------------------------------------------------------------------------
    # shared behaviour
    # -------------------------------------------------------------------------
    @property
    def position_rule(self) -> str:
        if self.rule == PositionRule.LOG_DIFF and self.dilation == 2.0:
            return "doubled_log"
        if self.dilation != 1.0:
            return f"{self.rule.value}*{self.dilation:g}"
        return self.rule.value

    def positions_of(self, m: np.ndarray, n: np.ndarray, diff: Optional[np.ndarray] = None) -> np.ndarray:
        """Positions of events, dilation applied last."""
        factor = self.scale * self.dilation
        if self.rule == PositionRule.RATIO:
            return self.dilation * (m.astype(np.float64) / n.astype(np.float64))
        if self.rule == PositionRule.LINEARIZED:
            return factor * ((m - n).astype(np.float64) / n.astype(np.float64))
        if diff is None:
            diff = np.log(m.astype(np.float64)) - np.log(n.astype(np.float64))
        return factor * diff

    def blocks(self) -> Iterator[AtomBlock]:
        """Atoms in deterministic enumeration order, in vectorised blocks."""
        for m, n, mass, diff in self._event_blocks():
            if m.size:
                yield AtomBlock(m=m, n=n, mass=mass, position=self.positions_of(m, n, diff))

    def atoms(self) -> Iterator[Tuple[int, int, int]]:
        """Stream of (m, n, mass) events."""
        for block in self.blocks():
            for m, n, mass in zip(block.m.tolist(), block.n.tolist(), block.mass.tolist()):
                yield m, n, mass

    def pushforward_double(self) -> "AtomicMeasure":
        """Image under t ↦ 2t; atoms and masses are untouched."""
        return self._with_dilation(2.0 * self.dilation)

    def __len__(self) -> int:
        return self.atom_count


# -----------------------------------------------------------------------------
# ProductMeasure - Σ w(m)w(n) Δ_position(m,n) over pairs of one residue array
# -----------------------------------------------------------------------------
@dataclass(frozen=True, eq=False)
class ProductMeasure(AtomicMeasure):
    elements: np.ndarray               # increasing int64
    weights: np.ndarray                # int64, aligned with elements
    rule: PositionRule = PositionRule.LOG_DIFF
    scale: float = 1.0
    dilation: float = 1.0
    half: IndexVariant = IndexVariant.FULL
    horizon: int = 0
    label: str = ""
    coordinates: Optional[np.ndarray] = None  # per-element ℓ for ORTHOLENGTH

    def __post_init__(self):
        if self.elements.shape != self.weights.shape:
            raise InvalidParameterError("elements and weights must have the same shape")
        if self.half not in (IndexVariant.FULL, IndexVariant.LOWER, IndexVariant.UPPER):
            raise InvalidParameterError(f"Product measures cover full/lower/upper halves, not {self.half}")
        if self.rule == PositionRule.ORTHOLENGTH and self.coordinates is None:
            raise InvalidParameterError("Ortholength positions need per-element coordinates")

    @property
    def atom_count(self) -> int:
        M = int(self.elements.size)
        full = M * (M - 1)
        return full if self.half == IndexVariant.FULL else full // 2

    @property
    def total_mass(self) -> int:
        s = sum(int(w) for w in self.weights.tolist())
        q = sum(int(w) * int(w) for w in self.weights.tolist())
        full = s * s - q
        return full if self.half == IndexVariant.FULL else full // 2

    def _coordinates(self) -> Optional[np.ndarray]:
        if self.rule == PositionRule.ORTHOLENGTH:
            return self.coordinates
        if self.rule == PositionRule.LOG_DIFF:
            return np.log(self.elements.astype(np.float64))
        return None

    def _event_blocks(self):
        M = int(self.elements.size)
        if M < 2:
            return
        rows_per_block = max(1, get_block_atoms() // M)
        coords = self._coordinates()
        col = np.arange(M)
        for start in range(0, M, rows_per_block):
            stop = min(M, start + rows_per_block)
            row = np.arange(start, stop)[:, None]
            if self.half == IndexVariant.FULL:
                keep = row != col[None, :]
            elif self.half == IndexVariant.LOWER:
                keep = row < col[None, :]
            else:
                keep = row > col[None, :]
            i, j = np.nonzero(keep)
            i = i + start
            m = self.elements[i]
            n = self.elements[j]
            mass = self.weights[i] * self.weights[j]
            diff = None if coords is None else coords[i] - coords[j]
            yield m, n, mass, diff

    def restrict_elements(self, min_element: int) -> "ProductMeasure":
        keep = self.elements >= min_element
        coords = None if self.coordinates is None else self.coordinates[keep]
        return replace(self, elements=self.elements[keep], weights=self.weights[keep], coordinates=coords)

    def _with_dilation(self, dilation: float) -> "ProductMeasure":
        return replace(self, dilation=dilation)


# -----------------------------------------------------------------------------
# PairListMeasure - explicit events, e.g. ω_q and ω_{p,N}
# -----------------------------------------------------------------------------
@dataclass(frozen=True, eq=False)
class PairListMeasure(AtomicMeasure):
    m: np.ndarray
    n: np.ndarray
    mass: np.ndarray
    rule: PositionRule = PositionRule.RATIO
    scale: float = 1.0
    dilation: float = 1.0
    horizon: int = 0
    label: str = ""

    def __post_init__(self):
        if not (self.m.shape == self.n.shape == self.mass.shape):
            raise InvalidParameterError("m, n and mass arrays must have the same shape")
        if self.rule == PositionRule.ORTHOLENGTH:
            raise InvalidParameterError("Pair lists carry no per-element coordinates")

    @property
    def atom_count(self) -> int:
        return int(self.m.size)

    @property
    def total_mass(self) -> int:
        return sum(int(x) for x in self.mass.tolist())

    def _event_blocks(self):
        step = get_block_atoms()
        for start in range(0, self.m.size, step):
            stop = start + step
            yield self.m[start:stop], self.n[start:stop], self.mass[start:stop], None

    def restrict_elements(self, min_element: int) -> "PairListMeasure":
        keep = (self.m >= min_element) & (self.n >= min_element)
        return replace(self, m=self.m[keep], n=self.n[keep], mass=self.mass[keep])

    def _with_dilation(self, dilation: float) -> "PairListMeasure":
        return replace(self, dilation=dilation)


def pushforward_double(measure: AtomicMeasure) -> AtomicMeasure:
    """Module-level form of AtomicMeasure.pushforward_double."""
    return measure.pushforward_double()


def restrict_elements(measure: AtomicMeasure, min_element: int) -> AtomicMeasure:
    return measure.restrict_elements(min_element)
