"""Value types for weighted logarithm families, scalings and index sets."""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from config.errors import InvalidParameterError


# -----------------------------------------------------------------------------
# Weight Mode
# Multiplicity attached to ln n: 1 or the Euler function φ(n)
# -----------------------------------------------------------------------------
class WeightMode(str, Enum):
    TRIVIAL = "trivial"
    EULER = "euler"


# -----------------------------------------------------------------------------
# WeightedLogFamily - {ln n : n ≡ a (mod b)} with multiplicities
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class WeightedLogFamily:
    a: int = 1
    b: int = 1
    weight_mode: WeightMode = WeightMode.TRIVIAL

    def __post_init__(self):
        if self.b < 1:
            raise InvalidParameterError(f"Modulus b must be >= 1, got {self.b}")
        if self.a < 1:
            raise InvalidParameterError(f"Residue a must be >= 1, got {self.a}")
        # a > b is folded back into 1..b; residue 0 is kept as a = b
        object.__setattr__(self, "a", (self.a - 1) % self.b + 1)
        object.__setattr__(self, "weight_mode", WeightMode(self.weight_mode))

    @property
    def is_euler(self) -> bool:
        return self.weight_mode == WeightMode.EULER

    def contains(self, n: int) -> bool:
        return n >= 1 and (n - self.a) % self.b == 0


# -----------------------------------------------------------------------------
# Scaling Kind
# ψ ≡ 1, N^α, N, N / ln N, or a tabulated custom function
# -----------------------------------------------------------------------------
class ScalingKind(str, Enum):
    TRIVIAL = "trivial"
    POWER = "power"
    LINEAR = "linear"
    INVERSE_AVERAGE_GAP = "invavg"
    CUSTOM = "custom"


# -----------------------------------------------------------------------------
# Normalizer Kind
# Divisor ψ′(N) applied to the measure before comparing with a limit
# -----------------------------------------------------------------------------
class NormalizerKind(str, Enum):
    PROBABILITY = "probability"  # total mass
    QUADRATIC = "quadratic"      # N² / ψ(N)
    SCALE = "scale"              # ψ(N)
    CUBIC = "cubic"              # N³
    EXPLICIT = "explicit"        # tabulated per N


class RegimeKind(str, Enum):
    ZERO = "zero"
    FINITE = "finite"
    INFINITE = "infinite"
    UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class RegimeClassification:
    kind: RegimeKind
    lam: Optional[float] = None
    heuristic: bool = False

    def __str__(self) -> str:
        if self.kind == RegimeKind.FINITE:
            return f"finite({self.lam:g})"
        return self.kind.value


def _check_table(table: Tuple[Tuple[int, float], ...], what: str) -> None:
    if not table:
        raise InvalidParameterError(f"{what} table must not be empty")
    previous_n, previous_v = 0, 0.0
    for n, v in table:
        if n < 1 or v <= 0 or not math.isfinite(v):
            raise InvalidParameterError(f"{what} table entry ({n}, {v}) must have N >= 1 and value > 0")
        if n <= previous_n:
            raise InvalidParameterError(f"{what} table horizons must be strictly increasing")
        if what == "Scaling" and v < previous_v:
            raise InvalidParameterError(
                f"Scaling table must be nondecreasing: psi({n}) = {v} < {previous_v}"
            )
        previous_n, previous_v = n, v


# -----------------------------------------------------------------------------
# ScalingSpec - the scaling function ψ and the normalizer ψ′
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class ScalingSpec:
    kind: ScalingKind = ScalingKind.TRIVIAL
    alpha: float = 0.0
    table: Tuple[Tuple[int, float], ...] = ()
    normalizer: Optional[NormalizerKind] = None  # None: natural choice for the regime
    normalizer_table: Tuple[Tuple[int, float], ...] = ()
    _lookup: Dict[int, float] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "kind", ScalingKind(self.kind))
        if self.normalizer is not None:
            object.__setattr__(self, "normalizer", NormalizerKind(self.normalizer))
        if self.kind == ScalingKind.POWER and (self.alpha < 0 or not math.isfinite(self.alpha)):
            raise InvalidParameterError(f"Power scaling needs alpha >= 0, got {self.alpha}")
        if self.kind == ScalingKind.CUSTOM:
            table = tuple(sorted((int(n), float(v)) for n, v in self.table))
            _check_table(table, "Scaling")
            object.__setattr__(self, "table", table)
            self._lookup.update(table)
        if self.normalizer == NormalizerKind.EXPLICIT:
            table = tuple(sorted((int(n), float(v)) for n, v in self.normalizer_table))
            _check_table(table, "Normalizer")
            object.__setattr__(self, "normalizer_table", table)

    def psi(self, N: int) -> float:
        """ψ(N) for a positive integer horizon."""
        if N < 1:
            raise InvalidParameterError(f"Horizon N must be >= 1, got {N}")
        if self.kind == ScalingKind.TRIVIAL:
            return 1.0
        if self.kind == ScalingKind.POWER:
            return float(N) ** self.alpha
        if self.kind == ScalingKind.LINEAR:
            return float(N)
        if self.kind == ScalingKind.INVERSE_AVERAGE_GAP:
            # N / ln N dips below e at N = 3; clamp so ψ stays nondecreasing
            if N < 3:
                return math.e
            return max(N / math.log(N), math.e)
        if N not in self._lookup:
            raise InvalidParameterError(
                f"Custom scaling is not tabulated at N = {N}. "
                f"Available: {', '.join(str(n) for n, _ in self.table)}"
            )
        return self._lookup[N]

    def label(self) -> str:
        if self.kind == ScalingKind.POWER:
            return f"power:{self.alpha:g}"
        return self.kind.value


# -----------------------------------------------------------------------------
# Index Sets
# I_N and its halves, J_q (fixed larger element) and J_{p,N} (fixed gap)
# -----------------------------------------------------------------------------
class IndexVariant(str, Enum):
    FULL = "full"
    LOWER = "lower"   # m < n
    UPPER = "upper"   # n < m
    COLUMN = "column"  # J_q
    GAP = "gap"        # J_{p,N}


@dataclass(frozen=True)
class IndexSet:
    N: int
    a: int = 1
    b: int = 1
    variant: IndexVariant = IndexVariant.FULL
    parameter: Optional[int] = None  # q for COLUMN, p for GAP

    def __post_init__(self):
        if self.N < 1:
            raise InvalidParameterError(f"Horizon N must be >= 1, got {self.N}")
        if self.a < 1 or self.b < 1:
            raise InvalidParameterError(f"Need a, b >= 1, got a={self.a}, b={self.b}")
        object.__setattr__(self, "a", (self.a - 1) % self.b + 1)
        object.__setattr__(self, "variant", IndexVariant(self.variant))
        if self.variant == IndexVariant.COLUMN:
            q = self.parameter
            if q is None or q < self.a or (q - self.a) % self.b:
                raise InvalidParameterError(
                    f"J_q needs q ≡ a (mod b) with q >= a; got q={q}, a={self.a}, b={self.b}"
                )
        if self.variant == IndexVariant.GAP:
            p = self.parameter
            if p is None or p < 1 or p % self.b:
                raise InvalidParameterError(f"J_(p,N) needs p >= 1 with p ≡ 0 (mod {self.b}); got p={p}")
