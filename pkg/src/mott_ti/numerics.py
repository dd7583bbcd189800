"""Small numerical helpers: finite-difference curvature and bisection."""

from __future__ import annotations

from typing import Callable

from .errors import RootNotFoundError


def second_derivative(
    f: Callable[[float], float],
    x0: float,
    step: float,
    richardson: bool = True,
) -> float:
    """Second derivative by the 5-point central stencil, O(step^4).

    With richardson=True the stencil is evaluated at step and step/2 and
    extrapolated, removing the leading error term.
    """

    def stencil(h: float) -> float:
        return (
            -f(x0 - 2.0 * h)
            + 16.0 * f(x0 - h)
            - 30.0 * f(x0)
            + 16.0 * f(x0 + h)
            - f(x0 + 2.0 * h)
        ) / (12.0 * h * h)

    coarse = stencil(step)
    if not richardson:
        return coarse
    fine = stencil(step / 2.0)
    return (16.0 * fine - coarse) / 15.0


def bisect_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    xtol: float,
    max_iter: int = 200,
) -> float:
    """Locate a root of f in [lo, hi] by bisection to absolute xtol.

    Raises RootNotFoundError when f(lo) and f(hi) do not change sign.
    """
    if not lo < hi:
        raise ValueError(f"invalid bracket [{lo}, {hi}]")
    f_lo = f(lo)
    f_hi = f(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise RootNotFoundError(f"no sign change in [{lo}, {hi}]")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo < xtol:
            return mid
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
