# -----------------------------------------------------------------------------
# Error-Term Fitting
#
# Big-O constants in the error terms are not explicit, so what can be
# checked is boundedness: the fitted sup |residual|/envelope must stay
# within a factor as the grid is refined.
# -----------------------------------------------------------------------------
import math
from typing import Callable, Iterable, Optional, Sequence, Tuple, TypeVar, Union

import numpy as np

from config.errors import InvalidParameterError

P = TypeVar("P")


def fit_error_constant(
    residuals: Sequence[float],
    envelopes: Union[Sequence[float], float],
) -> float:
    """sup |residual| / envelope over a grid; 0.0 when every residual is 0.

    Raises:
        InvalidParameterError: an envelope value is not positive
    """
    r = np.abs(np.asarray(residuals, dtype=np.float64))
    e = np.broadcast_to(np.asarray(envelopes, dtype=np.float64), r.shape)
    if r.size == 0:
        return 0.0
    if np.any(~(e > 0)):
        raise InvalidParameterError("Envelope must be positive on the tested grid")
    return float(np.max(r / e))


def fit_on_grid(
    grid: Iterable[P],
    residual: Callable[[P], float],
    envelope: Callable[[P], float],
) -> float:
    """fit_error_constant over a parameter grid given as callables."""
    points = list(grid)
    return fit_error_constant([residual(x) for x in points], [envelope(x) for x in points])


def stable_under_doubling(coarse: float, fine: float, factor: float = 2.0) -> bool:
    """True when the two fitted constants differ by less than `factor`."""
    if coarse == 0.0 and fine == 0.0:
        return True
    if coarse <= 0.0 or fine <= 0.0:
        return False
    return max(coarse, fine) / min(coarse, fine) < factor


def loglog_fit(
    horizons: Sequence[int],
    errors: Sequence[float],
) -> Tuple[Optional[float], Optional[float]]:
    """Least-squares fit log(error) = rate·log(N) + log(constant).

    Zero errors carry no slope information and are skipped; fewer than
    two usable points give (None, None).
    """
    pts = [(float(n), float(e)) for n, e in zip(horizons, errors) if e > 0 and n > 0]
    if len(pts) < 2 or len({n for n, _ in pts}) < 2:
        return None, None
    x = np.log([n for n, _ in pts])
    y = np.log([e for _, e in pts])
    rate, intercept = np.polyfit(x, y, 1)
    return float(rate), float(math.exp(intercept))
