"""Reference integrator used as ground truth for every bound check.

Adaptive Simpson with the usual Richardson correction.  It shares no code
with :mod:`pompeiu_ostrowski.quadrature` on purpose: the quadrature module
is what gets checked, this module is what it gets checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

DEFAULT_TOL = 1e-10
MAX_DEPTH = 60

Integrand = Callable[[float], float]


class DepthExceeded(RuntimeError):
    """Refinement hit the depth limit before meeting the tolerance."""


@dataclass(frozen=True)
class OracleResult:
    value: float
    est_error: float
    evaluations: int


def _simpson(fa: float, fm: float, fb: float, h: float) -> float:
    return h / 6.0 * (fa + 4.0 * fm + fb)


def _adaptive(g: Integrand, a: float, b: float, tol: float) -> OracleResult:
    # Start from four panels rather than one so that a single Simpson
    # estimate cannot accidentally agree with its halves on a coarse grid.
    edges = [a + (b - a) * k / 4.0 for k in range(5)]
    total = 0.0
    err = 0.0
    nevals = 0
    panel_tol = tol / 4.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        flo, fhi, fmid = g(lo), g(hi), g(0.5 * (lo + hi))
        nevals += 3
        whole = _simpson(flo, fmid, fhi, hi - lo)
        # explicit stack keeps recursion out of the Python call stack
        stack = [(lo, hi, flo, fmid, fhi, whole, panel_tol, 0)]
        while stack:
            x0, x1, f0, fm, f1, est, eps, depth = stack.pop()
            xm = 0.5 * (x0 + x1)
            fl = g(0.5 * (x0 + xm))
            fr = g(0.5 * (xm + x1))
            nevals += 2
            left = _simpson(f0, fl, fm, xm - x0)
            right = _simpson(fm, fr, f1, x1 - xm)
            delta = left + right - est
            if abs(delta) <= 15.0 * eps:
                total += left + right + delta / 15.0
                err += abs(delta) / 15.0
                continue
            if depth >= MAX_DEPTH or xm <= x0 or xm >= x1:
                raise DepthExceeded(
                    f"no convergence on [{x0!r}, {x1!r}] after {depth} bisections"
                )
            stack.append((xm, x1, fm, fr, f1, right, 0.5 * eps, depth + 1))
            stack.append((x0, xm, f0, fl, fm, left, 0.5 * eps, depth + 1))
    return OracleResult(total, err, nevals)


def integrate(
    g: Integrand,
    a: float,
    b: float,
    tol: float = DEFAULT_TOL,
    points: Optional[Iterable[float]] = None,
) -> OracleResult:
    """Integrate ``g`` over ``[a, b]`` to absolute tolerance ``tol``.

    ``points`` lists known kinks or narrow features strictly inside the
    interval; the range is split there first and the tolerance is shared
    between pieces in proportion to their length.  Reversed limits give
    the negated integral.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = float(a)
    b = float(b)
    if a == b:
        return OracleResult(0.0, 0.0, 0)
    if a > b:
        res = integrate(g, b, a, tol, points)
        return OracleResult(-res.value, res.est_error, res.evaluations)

    cuts = sorted({float(p) for p in (points or ()) if a < p < b})
    edges = [a, *cuts, b]
    total = 0.0
    err = 0.0
    nevals = 0
    width = b - a
    for lo, hi in zip(edges[:-1], edges[1:]):
        piece = _adaptive(g, lo, hi, tol * (hi - lo) / width)
        total += piece.value
        err += piece.est_error
        nevals += piece.evaluations
    return OracleResult(total, err, nevals)


def integrate_weighted(
    g: Integrand,
    w,
    a: float,
    b: float,
    tol: float = DEFAULT_TOL,
    points: Optional[Iterable[float]] = None,
) -> OracleResult:
    """Integrate ``g(t) * w(t)`` over ``[a, b]``.

    ``w`` is either a plain callable or a :class:`~pompeiu_ostrowski.bounds.WeightModel`;
    in the latter case its breakpoints are added to ``points``.
    """
    eval_w = getattr(w, "eval_w", w)
    cuts = list(points or ()) + list(getattr(w, "breakpoints", ()))
    return integrate(lambda t: g(t) * eval_w(t), a, b, tol, cuts)


def integrate_abs_kernel(
    w, x: float, a: float, b: float, tol: float = DEFAULT_TOL
) -> OracleResult:
    """``∫_a^b w(t)|x - t| dt`` with the kink at ``t = x`` split out."""
    return integrate_weighted(lambda t: math.fabs(x - t), w, a, b, tol, points=[x])
