# -----------------------------------------------------------------------------
# Compensated Summation
#
# Neumaier's variant of Kahan summation. Values are folded in the order
# they are added, so a fixed enumeration order gives reproducible totals.
# -----------------------------------------------------------------------------
from typing import Iterable

import numpy as np


class CompensatedSum:
    """
    Running floating-point sum with a compensation term.

    Usage:
        acc = CompensatedSum()
        acc.add(0.1)
        acc.extend(np.array([0.2, 0.3]))
        acc.total  # 0.6
    """

    __slots__ = ("_sum", "_carry")

    def __init__(self, start: float = 0.0):
        self._sum = float(start)
        self._carry = 0.0

    def add(self, value: float) -> None:
        """Add one value."""
        value = float(value)
        t = self._sum + value
        if abs(self._sum) >= abs(value):
            self._carry += (self._sum - t) + value
        else:
            self._carry += (value - t) + self._sum
        self._sum = t

    def extend(self, values: Iterable[float]) -> None:
        """
        Add a block of values.

        numpy arrays are reduced with numpy's pairwise sum first and the
        block subtotal is then added with compensation.
        """
        if isinstance(values, np.ndarray):
            if values.size:
                self.add(float(np.sum(values, dtype=np.float64)))
            return
        for v in values:
            self.add(v)

    def merge(self, other: "CompensatedSum") -> None:
        """Fold another accumulator into this one."""
        self.add(other._sum)
        self.add(other._carry)

    @property
    def total(self) -> float:
        return self._sum + self._carry

    def __float__(self) -> float:
        return self.total

    def __repr__(self) -> str:
        return f"CompensatedSum({self.total!r})"


def compensated_sum(values: Iterable[float]) -> float:
    """Sum an iterable with compensation in iteration order."""
    acc = CompensatedSum()
    acc.extend(values)
    return acc.total
