"""Both sides of each inequality, evaluated numerically.

Every function here returns a :class:`BoundReport` holding the left- and
right-hand sides and their difference.  A violated inequality shows up as a
negative slack; nothing is clamped.  Exact integrals on the left-hand sides
come from :mod:`pompeiu_ostrowski.oracle`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from . import oracle
from .funcmodel import DomainError, FunctionModel, Interval, affine, deviation_norm
from .means import (
    PositivePair,
    arithmetic_mean,
    identric_mean,
    logarithmic_mean,
    p_logarithmic_mean,
)

ORACLE_TOL = 1e-10
VERIFY_RTOL = 1e-9
WEIGHT_CHECK_POINTS = 1024


class ZeroWeight(ValueError):
    """The weight integrates to (numerically) zero over the interval."""


@dataclass
class BoundReport:
    equation_id: str
    a: float
    b: float
    x: Optional[float]
    lhs: float
    rhs: float
    slack: float
    rigorous: bool = True
    metadata: dict = field(default_factory=dict)

    @classmethod
    def make(cls, equation_id, a, b, x, lhs, rhs, rigorous=True, **metadata):
        lhs = float(lhs)
        rhs = float(rhs)
        return cls(equation_id, float(a), float(b), x if x is None else float(x),
                   lhs, rhs, rhs - lhs, bool(rigorous), metadata)

    def tolerance(self, rtol: float = VERIFY_RTOL) -> float:
        return rtol * max(1.0, abs(self.rhs))

    def holds(self, rtol: float = VERIFY_RTOL) -> bool:
        """True when ``lhs <= rhs`` (and ``lhs >= lower`` if one is recorded)."""
        tol = self.tolerance(rtol)
        if self.slack < -tol:
            return False
        lower = self.metadata.get("lower")
        return lower is None or self.lhs >= lower - tol * max(1.0, abs(lower))

    def as_dict(self) -> dict:
        return {
            "equation_id": self.equation_id,
            "a": self.a,
            "b": self.b,
            "x": self.x,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "rigorous": self.rigorous,
        }


@dataclass(frozen=True)
class WeightModel:
    """Nonnegative weight ``w``; ``breakpoints`` are handed to the oracle."""

    eval_w: Callable[[float], float]
    description: str
    breakpoints: tuple = ()

    def __call__(self, t: float) -> float:
        return self.eval_w(t)

    def check_nonnegative(self, iv: Interval) -> None:
        ts = np.linspace(iv.a, iv.b, WEIGHT_CHECK_POINTS)
        bad = [t for t in ts if self.eval_w(float(t)) < 0]
        if bad:
            raise ValueError(f"weight {self.description} is negative at t={bad[0]:g}")


def constant_weight(c: float = 1.0) -> WeightModel:
    c = float(c)
    return WeightModel(lambda t: c, f"const:{c:g}")


def power_weight(k: float) -> WeightModel:
    """``w(t) = t**k`` (use on positive intervals for non-integer ``k``)."""
    k = float(k)
    return WeightModel(lambda t: t**k, f"power:{k:g}")


def bump_weight(center: float, halfwidth: float) -> WeightModel:
    """Quartic bump ``(1 - u^2)^2`` with ``u = (t - center)/halfwidth``, zero outside."""
    center = float(center)
    halfwidth = float(halfwidth)
    if halfwidth <= 0:
        raise ValueError("bump halfwidth must be positive")

    def w(t: float) -> float:
        u = (t - center) / halfwidth
        return (1.0 - u * u) ** 2 if abs(u) < 1.0 else 0.0

    return WeightModel(
        w,
        f"bump:{center:g},{halfwidth:g}",
        (center - halfwidth, center, center + halfwidth),
    )


def parse_weight(spec: str) -> WeightModel:
    """``1``, ``t``, ``t2``, ``const:c``, ``power:k`` or ``bump:center,halfwidth``."""
    spec = spec.strip().lower()
    aliases = {"1": "const:1", "t": "power:1", "t2": "power:2", "t^2": "power:2"}
    spec = aliases.get(spec, spec)
    name, _, args = spec.partition(":")
    try:
        nums = [float(s) for s in args.split(",")] if args else []
    except ValueError:
        raise ValueError(f"bad numeric parameters in weight spec {spec!r}") from None
    if name == "const" and len(nums) == 1:
        return constant_weight(nums[0])
    if name == "power" and len(nums) == 1:
        return power_weight(nums[0])
    if name == "bump" and len(nums) == 2:
        return bump_weight(*nums)
    raise ValueError(f"unknown weight spec {spec!r}")


def _as_interval(iv) -> Interval:
    if isinstance(iv, Interval):
        return iv
    if isinstance(iv, PositivePair):
        return Interval(iv.a, iv.b)
    return Interval(*iv)


def _check_x(iv: Interval, x: float) -> float:
    x = float(x)
    if x not in iv:
        raise DomainError(f"x={x} is outside [{iv.a}, {iv.b}]")
    return x


def integral_mean(model: FunctionModel, iv: Interval, tol: float = ORACLE_TOL) -> float:
    """``(1/(b-a)) ∫_a^b f`` from the oracle."""
    model.check_interval(iv)
    return oracle.integrate(model.f, iv.a, iv.b, tol * iv.length).value / iv.length


def ostrowski_classic(model: FunctionModel, iv, x: float, M: float) -> BoundReport:
    """Classical Ostrowski bound with ``M >= sup |f'|`` supplied by the caller."""
    iv = _as_interval(iv)
    x = _check_x(iv, x)
    lhs = abs(model.f(x) - integral_mean(model, iv))
    u = (x - iv.midpoint) / iv.length
    rhs = (0.25 + u * u) * iv.length * M
    return BoundReport.make("1.1", iv.a, iv.b, x, lhs, rhs, M=float(M))


def _pompeiu_ostrowski(model, iv, x, mean, norm, rigorous) -> BoundReport:
    A = iv.midpoint
    lhs = abs(A * model.f(x) / x - mean)
    u = (x - A) / iv.length
    rhs = iv.length / abs(x) * (0.25 + u * u) * norm
    return BoundReport.make("3.1", iv.a, iv.b, x, lhs, rhs, rigorous, norm=norm)


def pompeiu_ostrowski(model: FunctionModel, iv, x: float) -> BoundReport:
    """Integral mean versus ``A f(x)/x``, bounded through ``sup |f - t f'|``."""
    iv = _as_interval(iv)
    x = _check_x(iv, x)
    norm, rigorous = deviation_norm(model, iv)
    return _pompeiu_ostrowski(model, iv, x, integral_mean(model, iv), norm, rigorous)


def pompeiu_ostrowski_sweep(
    model: FunctionModel, iv, xs: Iterable[float]
) -> list[BoundReport]:
    """:func:`pompeiu_ostrowski` over many ``x`` sharing one integral and norm."""
    iv = _as_interval(iv)
    norm, rigorous = deviation_norm(model, iv)
    mean = integral_mean(model, iv)
    return [_pompeiu_ostrowski(model, iv, _check_x(iv, x), mean, norm, rigorous) for x in xs]


def midpoint_bound(model: FunctionModel, iv) -> BoundReport:
    iv = _as_interval(iv)
    A = iv.midpoint
    norm, rigorous = deviation_norm(model, iv)
    lhs = abs(model.f(A) - integral_mean(model, iv))
    rhs = iv.length / (2.0 * abs(iv.a + iv.b)) * norm
    return BoundReport.make("3.6", iv.a, iv.b, A, lhs, rhs, rigorous, norm=norm)


def sharpness_probe(iv, beta: float, x: float, alpha: float = 1.0) -> float:
    """Smallest constant ``k`` in place of 1/4 that keeps the bound true at ``x``
    for ``f(t) = alpha t + beta``.

    The result does not depend on ``alpha``; its maximum over ``[a, b]`` is
    1/4, reached at the endpoints.
    """
    if beta == 0:
        raise ValueError("beta must be nonzero (the deviation norm would vanish)")
    iv = _as_interval(iv)
    x = _check_x(iv, x)
    lhs = pompeiu_ostrowski(affine(alpha, beta), iv, x).lhs
    u = (x - iv.midpoint) / iv.length
    return lhs * abs(x) / (iv.length * abs(beta)) - u * u


def _split_moments(iv: Interval, w: WeightModel, x: float) -> tuple[float, float, float, float]:
    """``∫_a^x w, ∫_x^b w, ∫_a^x t w, ∫_x^b t w``."""
    tol = ORACLE_TOL
    ident = lambda t: t
    one = lambda t: 1.0
    return (
        oracle.integrate_weighted(one, w, iv.a, x, tol).value,
        oracle.integrate_weighted(one, w, x, iv.b, tol).value,
        oracle.integrate_weighted(ident, w, iv.a, x, tol).value,
        oracle.integrate_weighted(ident, w, x, iv.b, tol).value,
    )


def weighted_bracket(iv, w: WeightModel, x: float) -> float:
    """Weight-dependent factor multiplying the deviation norm in the
    weighted bound; equals ``(1/|x|) ∫ w(t)|x - t| dt``."""
    iv = _as_interval(iv)
    x = _check_x(iv, x)
    w_left, w_right, tw_left, tw_right = _split_moments(iv, w, x)
    return float(np.sign(x)) * (w_left - w_right) + (tw_right - tw_left) / abs(x)


def weighted_bound(model: FunctionModel, iv, w: WeightModel, x: float) -> BoundReport:
    iv = _as_interval(iv)
    x = _check_x(iv, x)
    model.check_interval(iv)
    norm, rigorous = deviation_norm(model, iv)
    fw = oracle.integrate_weighted(model.f, w, iv.a, iv.b, ORACLE_TOL, [x]).value
    tw = oracle.integrate_weighted(lambda t: t, w, iv.a, iv.b, ORACLE_TOL, [x]).value
    lhs = abs(fw - model.f(x) / x * tw)
    bracket = weighted_bracket(iv, w, x)
    return BoundReport.make(
        "4.1", iv.a, iv.b, x, lhs, norm * bracket, rigorous,
        norm=norm, bracket=bracket, weight=w.description,
    )


def weighted_mean_point(iv, w: WeightModel, tol: float = ORACLE_TOL) -> float:
    """Centroid ``∫ t w / ∫ w`` of the weight; lies in ``[a, b]``."""
    iv = _as_interval(iv)
    if not iv.positive:
        raise DomainError("the weighted centroid bound needs 0 < a < b")
    mass = oracle.integrate_weighted(lambda t: 1.0, w, iv.a, iv.b, tol).value
    if mass <= tol:
        raise ZeroWeight(f"∫w = {mass:g} over [{iv.a}, {iv.b}]")
    moment = oracle.integrate_weighted(lambda t: t, w, iv.a, iv.b, tol).value
    return min(max(moment / mass, iv.a), iv.b)


def weighted_midpoint_bound(model: FunctionModel, iv, w: WeightModel) -> BoundReport:
    """Weighted bound evaluated at the centroid of ``w`` on both sides."""
    iv = _as_interval(iv)
    xs = weighted_mean_point(iv, w)
    norm, rigorous = deviation_norm(model, iv)
    w_left, w_right, tw_left, tw_right = _split_moments(iv, w, xs)
    mass = w_left + w_right
    moment = tw_left + tw_right
    fw = oracle.integrate_weighted(model.f, w, iv.a, iv.b, ORACLE_TOL, [xs]).value
    lhs = abs(model.f(xs) - fw / mass)
    bracket = (w_left - w_right) / mass + (tw_right - tw_left) / moment
    return BoundReport.make(
        "4.4", iv.a, iv.b, xs, lhs, norm * bracket, rigorous,
        norm=norm, bracket=bracket, weight=w.description,
    )


def _positive_pair(pair) -> PositivePair:
    if isinstance(pair, PositivePair):
        return pair
    if isinstance(pair, Interval):
        return PositivePair(pair.a, pair.b)
    return PositivePair(*pair)


def mean_inequality_62(pair, p: float) -> BoundReport:
    """``|A^p - L_p^p|`` against its power-function bound."""
    pr = _positive_pair(pair)
    p = float(p)
    if p in (-1.0, 0.0):
        raise ValueError("p must not be -1 or 0")
    a, b = pr.a, pr.b
    A = arithmetic_mean(pr)
    lhs = abs(A**p - p_logarithmic_mean(pr, p) ** p)
    end = a if p < 0 else b
    rhs = 0.25 * abs(1.0 - p) * end**p * (b - a) / A
    return BoundReport.make("6.2", a, b, None, lhs, rhs, p=p)


def mean_inequality_63(pair) -> BoundReport:
    """``0 <= A - L <= (b - a) L / (2a)``."""
    pr = _positive_pair(pair)
    L = logarithmic_mean(pr)
    lhs = arithmetic_mean(pr) - L
    rhs = (pr.b - pr.a) * L / (2.0 * pr.a)
    return BoundReport.make("6.3", pr.a, pr.b, None, lhs, rhs, lower=0.0)


def mean_inequality_64(pair) -> BoundReport:
    """``1 <= A/I <= exp{(b - a)/(4A) max(|ln(a/e)|, |ln(b/e)|)}``."""
    pr = _positive_pair(pair)
    A = arithmetic_mean(pr)
    lhs = A / identric_mean(pr)
    spread = max(abs(math.log(pr.a) - 1.0), abs(math.log(pr.b) - 1.0))
    rhs = math.exp((pr.b - pr.a) / (4.0 * A) * spread)
    return BoundReport.make("6.4", pr.a, pr.b, None, lhs, rhs, lower=1.0)


def x_grid(iv, n: int) -> np.ndarray:
    iv = _as_interval(iv)
    if n < 1:
        raise ValueError("grid needs at least one point")
    if n == 1:
        return np.array([iv.midpoint])
    xs = np.linspace(iv.a, iv.b, n)
    xs[-1] = iv.b
    return xs


def worst(reports: Sequence[BoundReport]) -> Optional[BoundReport]:
    """Report with the smallest slack relative to its tolerance."""
    if not reports:
        return None
    return min(reports, key=lambda r: r.slack / max(1.0, abs(r.rhs)))
