"""Compactly supported test functions paired against measures."""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np

from config.errors import InvalidParameterError


class ObservableKind(str, Enum):
    HAT = "hat"
    SMOOTH_BUMP = "smooth_bump"


# -----------------------------------------------------------------------------
# TestFunction - hat (Lipschitz, Var = 2) or C¹ cubic bump, both peaking at 1
#
# hat:         max(0, 1 - |u|)
# smooth_bump: 1 - 3u² + 2|u|³ on |u| <= 1
# with u = (s - center) / half_width. Both integrate to half_width.
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class TestFunction:
    __test__ = False  # not a pytest test class

    kind: ObservableKind
    center: float
    half_width: float

    def __post_init__(self):
        object.__setattr__(self, "kind", ObservableKind(self.kind))
        if not self.half_width > 0:
            raise InvalidParameterError(f"Test function half-width must be > 0, got {self.half_width}")

    @classmethod
    def hat(cls, center: float, half_width: float) -> "TestFunction":
        return cls(ObservableKind.HAT, float(center), float(half_width))

    @classmethod
    def smooth_bump(cls, center: float, half_width: float) -> "TestFunction":
        return cls(ObservableKind.SMOOTH_BUMP, float(center), float(half_width))

    def __call__(self, s):
        u = np.abs((np.asarray(s, dtype=np.float64) - self.center) / self.half_width)
        if self.kind == ObservableKind.HAT:
            out = np.clip(1.0 - u, 0.0, None)
        else:
            out = np.where(u < 1.0, 1.0 - 3.0 * u ** 2 + 2.0 * u ** 3, 0.0)
        return out if out.ndim else float(out)

    @property
    def support(self) -> Tuple[float, float]:
        return self.center - self.half_width, self.center + self.half_width

    @property
    def breakpoints(self) -> Tuple[float, float, float]:
        """Points where the function is not smooth (for quadrature)."""
        lo, hi = self.support
        return lo, self.center, hi

    @property
    def area(self) -> float:
        return self.half_width

    @property
    def sup_norm(self) -> float:
        return 1.0

    @property
    def variation(self) -> float:
        return 2.0

    def label(self) -> str:
        return f"{self.kind.value}(c={self.center:g},w={self.half_width:g})"
