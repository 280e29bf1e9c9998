"""Locating the point promised by Pompeiu's mean value theorem.

For ``x1 != x2`` on one side of 0 there is ``xi`` strictly between them with

    (x1 f(x2) - x2 f(x1)) / (x1 - x2) = f(xi) - xi f'(xi),

i.e. the tangent at ``xi`` meets the y-axis where the secant through
``(x1, f(x1))`` and ``(x2, f(x2))`` does.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .funcmodel import DomainError, FunctionModel, deviation

DEFAULT_TOL = 1e-10
SCAN_POINTS = 1024
BISECT_REL_WIDTH = 1e-13


class NoRootLocated(RuntimeError):
    """The scan found neither a sign change nor a point within tolerance."""


@dataclass(frozen=True)
class PompeiuPoint:
    xi: float
    residual: float
    quotient: float


def _check_pair(model: FunctionModel, x1: float, x2: float) -> None:
    if x1 == x2:
        raise ValueError("x1 and x2 must differ")
    if not x1 * x2 > 0:
        raise DomainError(f"[{min(x1, x2)}, {max(x1, x2)}] contains 0")
    model.check_domain(x1)
    model.check_domain(x2)


def pompeiu_quotient(model: FunctionModel, x1: float, x2: float) -> float:
    """y-intercept of the secant through the graph at ``x1`` and ``x2``."""
    x1 = float(x1)
    x2 = float(x2)
    _check_pair(model, x1, x2)
    return (x1 * model.f(x2) - x2 * model.f(x1)) / (x1 - x2)


def find_pompeiu_point(
    model: FunctionModel, x1: float, x2: float, tol: float = DEFAULT_TOL
) -> PompeiuPoint:
    """Find ``xi`` in ``(x1, x2)`` solving the Pompeiu relation to ``tol``.

    The residual ``g(t) = deviation(t) - quotient`` is scanned on a uniform
    interior grid.  If it stays within ``tol`` everywhere (affine models)
    the midpoint is returned.  Otherwise the first sign-change bracket is
    bisected, and failing that the grid point with smallest ``|g|`` is used
    if it meets ``tol``.
    """
    x1 = float(x1)
    x2 = float(x2)
    if not x1 < x2:
        raise ValueError(f"need x1 < x2, got {x1}, {x2}")
    q = pompeiu_quotient(model, x1, x2)

    def g(t: float) -> float:
        return deviation(model, t) - q

    width = x2 - x1
    grid = x1 + width * np.arange(1, SCAN_POINTS + 1) / (SCAN_POINTS + 1)
    gv = np.array([g(float(t)) for t in grid])

    if np.all(np.abs(gv) <= tol):
        xi = 0.5 * (x1 + x2)
        return PompeiuPoint(xi, g(xi), q)

    zero = np.flatnonzero(gv == 0.0)
    flips = np.flatnonzero(np.signbit(gv[:-1]) != np.signbit(gv[1:]))
    first_zero = zero[0] if zero.size else SCAN_POINTS
    first_flip = flips[0] if flips.size else SCAN_POINTS

    if first_zero <= first_flip and zero.size:
        xi = float(grid[first_zero])
        return PompeiuPoint(xi, float(gv[first_zero]), q)

    if flips.size:
        lo, hi = float(grid[first_flip]), float(grid[first_flip + 1])
        glo = float(gv[first_flip])
        stop = BISECT_REL_WIDTH * width
        while hi - lo > stop:
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break
            gm = g(mid)
            if gm == 0.0:
                lo = hi = mid
                break
            if np.signbit(gm) == np.signbit(glo):
                lo, glo = mid, gm
            else:
                hi = mid
        xi = 0.5 * (lo + hi)
        res = g(xi)
        if abs(res) <= tol:
            return PompeiuPoint(xi, res, q)
        # a jump in g rather than a root; fall through to the nearest sample

    k = int(np.argmin(np.abs(gv)))
    if abs(gv[k]) <= tol:
        return PompeiuPoint(float(grid[k]), float(gv[k]), q)
    raise NoRootLocated(
        f"no point in ({x1}, {x2}) with |f - t f' - {q!r}| <= {tol}; "
        "is the derivative evaluator consistent with f?"
    )


def y_intercepts(
    model: FunctionModel, x1: float, x2: float, xi: float
) -> tuple[float, float]:
    """``(secant intercept, tangent-at-xi intercept)`` on the y-axis."""
    secant = pompeiu_quotient(model, x1, x2)
    tangent = deviation(model, float(xi))
    return secant, tangent
