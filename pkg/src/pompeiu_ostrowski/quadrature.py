"""Composite rule ``S_n`` with a-priori remainder certificates.

On each cell ``[x_i, x_{i+1}]`` the rule replaces ``∫ f`` by
``f(xi_i)/xi_i * (x_{i+1}^2 - x_i^2)/2``; it integrates ``f(t) = t``
exactly and reduces to the midpoint rule when ``xi_i`` is the cell centre.
All sums run left to right with :func:`math.fsum`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import oracle
from .funcmodel import DomainError, FunctionModel, Interval, deviation_norm

RULES = ("midpoint", "left", "right")


@dataclass(frozen=True)
class Partition:
    nodes: tuple
    intermediates: tuple

    def __post_init__(self):
        nodes = tuple(float(x) for x in self.nodes)
        xis = tuple(float(x) for x in self.intermediates)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "intermediates", xis)
        if len(nodes) < 2:
            raise ValueError("a partition needs at least two nodes")
        if len(xis) != len(nodes) - 1:
            raise ValueError(f"{len(nodes) - 1} cells but {len(xis)} intermediate points")
        if any(lo >= hi for lo, hi in zip(nodes, nodes[1:])):
            raise ValueError("nodes must be strictly increasing")
        if not nodes[0] > 0:
            raise DomainError("quadrature needs 0 < a")
        for i, xi in enumerate(xis):
            if not nodes[i] <= xi <= nodes[i + 1]:
                raise ValueError(f"xi[{i}]={xi} not in [{nodes[i]}, {nodes[i + 1]}]")

    @classmethod
    def from_nodes(cls, nodes: Sequence[float], rule: str = "midpoint") -> "Partition":
        nodes = [float(x) for x in nodes]
        return cls(tuple(nodes), tuple(_pick(lo, hi, rule) for lo, hi in zip(nodes, nodes[1:])))

    @property
    def n(self) -> int:
        return len(self.nodes) - 1

    @property
    def a(self) -> float:
        return self.nodes[0]

    @property
    def b(self) -> float:
        return self.nodes[-1]

    def cells(self):
        """Yield ``(x_i, x_{i+1}, xi_i)`` left to right."""
        return zip(self.nodes[:-1], self.nodes[1:], self.intermediates)


def _pick(lo: float, hi: float, rule: str) -> float:
    if rule == "midpoint":
        return 0.5 * (lo + hi)
    if rule == "left":
        return lo
    if rule == "right":
        return hi
    raise ValueError(f"rule must be one of {RULES}, got {rule!r}")


def uniform_partition(iv: Interval, n: int, rule: str = "midpoint") -> Partition:
    if n < 1:
        raise ValueError("n must be at least 1")
    if not iv.positive:
        raise DomainError("quadrature needs 0 < a")
    nodes = np.linspace(iv.a, iv.b, n + 1)
    nodes[0], nodes[-1] = iv.a, iv.b
    return Partition.from_nodes(nodes, rule)


@dataclass(frozen=True)
class QuadratureResult:
    n: int
    rule: str
    value: float
    reference: float
    actual_error: float
    bound_tier1: float
    bound_tier2: float
    bound_tier3: float
    rigorous: bool = True

    @property
    def certificate(self) -> str:
        return "certificate" if self.rigorous else "estimated certificate"

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "rule": self.rule,
            "value": self.value,
            "reference": self.reference,
            "actual_error": self.actual_error,
            "tier1": self.bound_tier1,
            "tier2": self.bound_tier2,
            "tier3": self.bound_tier3,
            "rigorous": self.rigorous,
        }


def s_n(model: FunctionModel, part: Partition) -> float:
    return math.fsum(
        model.f(xi) / xi * (hi * hi - lo * lo) / 2.0 for lo, hi, xi in part.cells()
    )


def m_n(model: FunctionModel, part: Partition) -> float:
    """Composite midpoint sum; the partition's intermediate points are ignored."""
    return math.fsum(
        model.f(0.5 * (lo + hi)) * (hi - lo) for lo, hi in zip(part.nodes, part.nodes[1:])
    )


def _norm(model: FunctionModel, part: Partition) -> tuple[float, bool]:
    return deviation_norm(model, Interval(part.a, part.b))


def remainder_bounds(model: FunctionModel, part: Partition) -> tuple[float, float, float]:
    """Three nested bounds on ``|∫f - S_n|``, tightest first.

    The first uses where each ``xi_i`` sits in its cell, the second only
    ``xi_i`` itself, the third only ``a``.
    """
    norm, _ = _norm(model, part)
    t1, t2, t3 = [], [], []
    for lo, hi, xi in part.cells():
        h = hi - lo
        off = (xi - 0.5 * (lo + hi)) / h
        t1.append(h * h / xi * (0.25 + off * off))
        t2.append(h * h / xi)
        t3.append(h * h)
    return (
        norm * math.fsum(t1),
        0.5 * norm * math.fsum(t2),
        norm / (2.0 * part.a) * math.fsum(t3),
    )


def midpoint_remainder_bound(model: FunctionModel, part: Partition) -> tuple[float, float]:
    """``(tight, coarse)`` bounds on ``|∫f - M_n|``."""
    norm, _ = _norm(model, part)
    cells = list(zip(part.nodes, part.nodes[1:]))
    tight = 0.5 * norm * math.fsum((hi - lo) ** 2 / (lo + hi) for lo, hi in cells)
    coarse = norm / (4.0 * part.a) * math.fsum((hi - lo) ** 2 for lo, hi in cells)
    return tight, coarse


def n_for_tolerance(model: FunctionModel, iv: Interval, eps: float) -> int:
    """Smallest uniform ``n`` whose coarsest bound ``norm (b-a)^2 / (2 a n)`` is ``<= eps``."""
    if not eps > 0:
        raise ValueError("eps must be positive")
    if not iv.positive:
        raise DomainError("quadrature needs 0 < a")
    norm, _ = deviation_norm(model, iv)
    if norm == 0.0:
        return 1
    c = norm * iv.length**2 / (2.0 * iv.a)
    n = max(1, math.ceil(c / eps))
    # ceil of a rounded quotient can land one off either way
    while n > 1 and c / (n - 1) <= eps:
        n -= 1
    while c / n > eps:
        n += 1
    return n


def reference_integral(model: FunctionModel, iv: Interval, tol: float = oracle.DEFAULT_TOL) -> float:
    return oracle.integrate(model.f, iv.a, iv.b, tol).value


def evaluate(model: FunctionModel, part: Partition, rule: str = "general") -> QuadratureResult:
    """Apply ``S_n`` (``rule="general"``) or ``M_n`` (``rule="midpoint"``) and
    compare against the oracle.

    For ``M_n`` the tiers are the two midpoint bounds followed by the
    general coarse bound, which keeps them ordered.
    """
    norm_rigorous = _norm(model, part)[1]
    iv = Interval(part.a, part.b)
    ref = reference_integral(model, iv)
    if rule == "general":
        value = s_n(model, part)
        tiers = remainder_bounds(model, part)
    elif rule == "midpoint":
        value = m_n(model, part)
        tight, coarse = midpoint_remainder_bound(model, part)
        tiers = (tight, coarse, remainder_bounds(model, part)[2])
    else:
        raise ValueError(f"rule must be 'general' or 'midpoint', got {rule!r}")
    return QuadratureResult(part.n, rule, value, ref, abs(ref - value), *tiers, norm_rigorous)


def integrate_with_certificate(model: FunctionModel, iv: Interval, eps: float) -> QuadratureResult:
    """Uniform midpoint ``S_n`` with ``n`` chosen so the coarsest bound is ``<= eps``."""
    n = n_for_tolerance(model, iv, eps)
    return evaluate(model, uniform_partition(iv, n, "midpoint"))
