# -----------------------------------------------------------------------------
# Limit-Side Integrals
#
# ∫ f·g for a test function f and a limit density g. Hats against
# constants and two-sided exponentials are integrated in closed form;
# everything else goes through scipy's adaptive quadrature with the
# kinks of f and the jumps of g passed as breakpoints.
# -----------------------------------------------------------------------------
import math
from typing import Callable, List, Sequence

import numpy as np
from scipy import integrate as sp_integrate

from config.settings import QUAD_TOLERANCE
from limits.densities import LimitDensity
from measures.observables import ObservableKind, TestFunction


def _linear_exp_integral(alpha: float, beta: float, lam: float, x0: float, x1: float) -> float:
    """∫_{x0}^{x1} (α + βs) e^{λs} ds, λ ≠ 0."""
    def antiderivative(s: float) -> float:
        return math.exp(lam * s) * ((alpha + beta * s) / lam - beta / (lam * lam))
    return antiderivative(x1) - antiderivative(x0)


def hat_exponential_integral(f: TestFunction, amplitude: float, rate: float) -> float:
    """Closed form of ∫ hat(s)·A e^{-κ|s|} ds."""
    c, w = f.center, f.half_width
    # hat = 1 - |s - c|/w, written as α + βs on each side of c
    pieces = [
        (c - w, c, 1.0 - c / w, 1.0 / w),
        (c, c + w, 1.0 + c / w, -1.0 / w),
    ]
    total = 0.0
    for x0, x1, alpha, beta in pieces:
        for lo, hi, lam in ((x0, min(x1, 0.0), rate), (max(x0, 0.0), x1, -rate)):
            if hi > lo:
                total += _linear_exp_integral(alpha, beta, lam, lo, hi)
    return amplitude * total


def _quad(func: Callable[[float], float], lo: float, hi: float, points: Sequence[float]) -> float:
    cuts: List[float] = sorted({lo, hi, *[p for p in points if lo < p < hi]})
    total = 0.0
    for x0, x1 in zip(cuts[:-1], cuts[1:]):
        value, _ = sp_integrate.quad(
            func, x0, x1, epsabs=QUAD_TOLERANCE, epsrel=QUAD_TOLERANCE, limit=200,
        )
        total += value
    return total


def integrate(density: LimitDensity, f: TestFunction) -> float:
    """∫ f(s) g(s) ds over the support of f."""
    constant = density.constant
    if constant is not None:
        return constant * f.area
    exponential = density.exponential
    if exponential is not None and f.kind == ObservableKind.HAT:
        return hat_exponential_integral(f, *exponential)

    lo, hi = f.support
    points = list(f.breakpoints) + density.jumps(lo, hi)
    return _quad(lambda s: float(f(s)) * float(density(s)), lo, hi, points)


def interval_integral(density: LimitDensity, lo: float, hi: float) -> float:
    """∫_lo^hi g(s) ds."""
    constant = density.constant
    if constant is not None:
        return constant * (hi - lo)
    if density.has_cdf:
        return float(density.cdf(hi)) - float(density.cdf(lo))
    points = density.jumps(lo, hi) + ([0.0] if lo < 0.0 < hi else [])
    return _quad(lambda s: float(density(s)), lo, hi, points)


def bin_averages(density: LimitDensity, edges: np.ndarray) -> np.ndarray:
    """Mean of g over each bin [edges[i], edges[i+1]]."""
    widths = np.diff(edges)
    totals = np.array([interval_integral(density, lo, hi) for lo, hi in zip(edges[:-1], edges[1:])])
    return totals / widths
