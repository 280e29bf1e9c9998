"""Differentiable test functions and their Pompeiu deviation ``f(t) - t f'(t)``.

Built-in families carry a closed-form sup-norm of the deviation; anything
else falls back to a sampled estimate flagged as non-rigorous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from scipy.optimize import minimize_scalar

NORM_SAMPLES = 4097
NORM_REFINE = 3
NORM_XTOL = 1e-10


class DomainError(ValueError):
    """An argument lies outside the domain of a function family."""


@dataclass(frozen=True, init=False)
class Interval:
    """Closed interval ``[a, b]`` with ``a < b`` that does not contain 0."""

    a: float
    b: float

    def __init__(self, a: float, b: float):
        a = float(a)
        b = float(b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise DomainError(f"interval endpoints must be finite, got [{a}, {b}]")
        if not a < b:
            raise DomainError(f"interval needs a < b, got [{a}, {b}]")
        if not a * b > 0:
            raise DomainError(f"interval [{a}, {b}] contains 0")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.a + self.b)

    @property
    def length(self) -> float:
        return self.b - self.a

    @property
    def positive(self) -> bool:
        return self.a > 0

    def __contains__(self, x: float) -> bool:
        return self.a <= x <= self.b


@dataclass(frozen=True)
class FunctionModel:
    """A scalar function with its derivative.

    ``analytic_deviation_norm`` maps an :class:`Interval` to the exact value
    of ``sup |f(t) - t f'(t)|`` over it; it is ``None`` for custom models.
    ``positive_only`` marks families defined only for ``t > 0``.
    """

    family: str
    eval_f: Callable[[float], float]
    eval_df: Callable[[float], float]
    analytic_deviation_norm: Optional[Callable[[Interval], float]] = None
    positive_only: bool = False
    params: tuple = field(default=())

    def check_domain(self, t: float) -> None:
        if self.positive_only and not t > 0:
            raise DomainError(f"{self.name} is defined only for t > 0, got {t}")

    def check_interval(self, iv: Interval) -> None:
        if self.positive_only and not iv.positive:
            raise DomainError(f"{self.name} needs a positive interval, got [{iv.a}, {iv.b}]")

    def f(self, t: float) -> float:
        self.check_domain(t)
        return self.eval_f(t)

    def df(self, t: float) -> float:
        self.check_domain(t)
        return self.eval_df(t)

    @property
    def name(self) -> str:
        if not self.params:
            return self.family
        return f"{self.family}:" + ",".join(f"{p:g}" for p in self.params)

    def __str__(self) -> str:
        return self.name


def affine(alpha: float, beta: float) -> FunctionModel:
    """``f(t) = alpha t + beta``; the deviation is the constant ``beta``."""
    alpha = float(alpha)
    beta = float(beta)
    return FunctionModel(
        "affine",
        lambda t: alpha * t + beta,
        lambda t: alpha,
        lambda iv: abs(beta),
        params=(alpha, beta),
    )


def power(p: float) -> FunctionModel:
    """``f(t) = t**p`` on ``t > 0``; deviation ``(1 - p) t**p`` is monotone."""
    p = float(p)

    def norm(iv: Interval) -> float:
        return abs(1.0 - p) * max(iv.a**p, iv.b**p)

    return FunctionModel(
        "power",
        lambda t: t**p,
        lambda t: p * t ** (p - 1.0),
        norm,
        positive_only=True,
        params=(p,),
    )


def reciprocal() -> FunctionModel:
    """``f(t) = 1/t``; deviation ``2/t`` peaks at the endpoint nearest 0."""
    return FunctionModel(
        "reciprocal",
        lambda t: 1.0 / t,
        lambda t: -1.0 / (t * t),
        lambda iv: 2.0 / min(abs(iv.a), abs(iv.b)),
    )


def logarithm() -> FunctionModel:
    """``f(t) = ln t``; deviation ``ln(t/e)`` is V-shaped in ``|.|`` around e."""
    return FunctionModel(
        "log",
        math.log,
        lambda t: 1.0 / t,
        lambda iv: max(abs(math.log(iv.a) - 1.0), abs(math.log(iv.b) - 1.0)),
        positive_only=True,
    )


def custom(
    f: Callable[[float], float],
    df: Callable[[float], float],
    name: str = "custom",
    positive_only: bool = False,
) -> FunctionModel:
    return FunctionModel(name, f, df, None, positive_only=positive_only)


def parse_function(spec: str) -> FunctionModel:
    """Build a model from ``affine:α,β``, ``power:p``, ``reciprocal`` or ``log``."""
    name, _, args = spec.strip().partition(":")
    name = name.strip().lower()
    try:
        nums = [float(s) for s in args.split(",")] if args.strip() else []
    except ValueError:
        raise ValueError(f"bad numeric parameters in function spec {spec!r}") from None
    if name == "affine" and len(nums) == 2:
        return affine(*nums)
    if name == "power" and len(nums) == 1:
        return power(nums[0])
    if name == "reciprocal" and not nums:
        return reciprocal()
    if name in ("log", "logarithm") and not nums:
        return logarithm()
    raise ValueError(f"unknown function spec {spec!r}")


def deviation(model: FunctionModel, t: float) -> float:
    """Pompeiu deviation ``f(t) - t f'(t)``, the tangent's intercept at 0."""
    return model.f(t) - t * model.df(t)


def estimate_deviation_norm(model: FunctionModel, iv: Interval) -> float:
    """Sampled sup of ``|f - t f'|`` over ``iv``, refined near the top samples.

    The result is never smaller than the largest sample.
    """
    model.check_interval(iv)
    ts = np.linspace(iv.a, iv.b, NORM_SAMPLES)
    vals = np.array([abs(deviation(model, float(t))) for t in ts])
    best = float(vals.max())
    h = ts[1] - ts[0]
    for k in np.argsort(vals)[::-1][:NORM_REFINE]:
        lo = max(iv.a, ts[k] - h)
        hi = min(iv.b, ts[k] + h)
        res = minimize_scalar(
            lambda t: -abs(deviation(model, t)),
            bounds=(lo, hi),
            method="bounded",
            options={"xatol": NORM_XTOL},
        )
        best = max(best, -float(res.fun))
    return best


def deviation_norm(model: FunctionModel, iv: Interval) -> tuple[float, bool]:
    """``(sup |f - t f'| over iv, rigorous)``.

    ``rigorous`` is True when the value comes from the family's closed form.
    """
    model.check_interval(iv)
    if model.analytic_deviation_norm is not None:
        return float(model.analytic_deviation_norm(iv)), True
    return estimate_deviation_norm(model, iv), False


def derivative_mismatch(model: FunctionModel, t: float) -> float:
    """Relative gap between ``df(t)`` and a central difference of ``f``."""
    h = 1e-6 * max(1.0, abs(t))
    fd = (model.f(t + h) - model.f(t - h)) / (2.0 * h)
    exact = model.df(t)
    return abs(fd - exact) / max(1.0, abs(exact))
