"""Randomised sweeps that check every bound against the oracle.

Each check returns a :class:`CheckResult`; :func:`run_all` is what the
``verify`` subcommand prints.  The sweeps are deterministic for a given seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import bounds, funcmodel as fm, oracle, pompeiu, quadrature
from .means import PositivePair, chain_holds

DEFAULT_SEED = 12345
INTERVAL_RANGE = (0.1, 10.0)
SHARPNESS_TOL = 1e-9
EQUALITY_TOL = 1e-12
BRACKET_RTOL = 1e-9
QUAD_ATOL = 1e-9
MEANS_P = (-3.0, -2.0, -0.5, 0.5, 2.0, 3.0)


def standard_models() -> list[fm.FunctionModel]:
    return [fm.affine(2, 3), fm.power(2), fm.power(-2), fm.reciprocal(), fm.logarithm()]


def standard_weights() -> list[bounds.WeightModel]:
    return [bounds.constant_weight(1.0), bounds.power_weight(1), bounds.power_weight(2)]


@dataclass
class CheckResult:
    name: str
    cases: int
    violations: int
    worst_slack: float
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def as_dict(self) -> dict:
        return {
            "check": self.name,
            "cases": self.cases,
            "violations": self.violations,
            "worst_slack": self.worst_slack,
            "ok": self.ok,
        }


def random_intervals(rng: np.random.Generator, count: int, lo=INTERVAL_RANGE[0], hi=INTERVAL_RANGE[1]):
    out = []
    while len(out) < count:
        a, b = sorted(rng.uniform(lo, hi, size=2))
        if b - a > 1e-6 * b:
            out.append(fm.Interval(a, b))
    return out


def _tally(name: str, reports: list[bounds.BoundReport], rhs_scale: float = 1.0) -> CheckResult:
    bad = 0
    worst = math.inf
    for r in reports:
        if rhs_scale != 1.0:
            r = bounds.BoundReport.make(r.equation_id, r.a, r.b, r.x, r.lhs, r.rhs * rhs_scale,
                                        r.rigorous, **r.metadata)
        bad += not r.holds()
        worst = min(worst, r.slack)
    return CheckResult(name, len(reports), bad, worst)


def check_main_bound(rng, n_intervals=50, n_x=101, models=None, rhs_scale=1.0) -> CheckResult:
    reports = []
    ivs = random_intervals(rng, n_intervals)
    for model in models or standard_models():
        for iv in ivs:
            reports.extend(bounds.pompeiu_ostrowski_sweep(model, iv, bounds.x_grid(iv, n_x)))
    return _tally("main_bound", reports, rhs_scale)


def check_affine_equality(rng, n_intervals=10) -> CheckResult:
    """Slack vanishes at both endpoints for affine functions."""
    cases = bad = 0
    worst = math.inf
    for iv in random_intervals(rng, n_intervals):
        alpha, beta = rng.uniform(-5, 5, size=2)
        for r in bounds.pompeiu_ostrowski_sweep(fm.affine(alpha, beta), iv, [iv.a, iv.b]):
            cases += 1
            gap = abs(r.slack) / max(1.0, abs(r.rhs))
            bad += gap > EQUALITY_TOL
            worst = min(worst, r.slack)
    return CheckResult("affine_endpoint_equality", cases, bad, worst)


def sharpness_scan(iv: fm.Interval, n: int, beta: float = 3.0, alpha: float = 2.0):
    """``(xs, k(x))`` on an ``n``-point grid for ``f(t) = alpha t + beta``."""
    xs = bounds.x_grid(iv, n)
    ks = np.array([bounds.sharpness_probe(iv, beta, float(x), alpha) for x in xs])
    return xs, ks


def check_sharpness(rng, n_x=101) -> CheckResult:
    ivs = [fm.Interval(1.0, 2.0)] + random_intervals(rng, 4)
    bad = 0
    worst = math.inf
    for iv in ivs:
        xs, ks = sharpness_scan(iv, n_x)
        top = float(ks.max())
        ends = (ks[0], ks[-1])
        bad += abs(top - 0.25) > SHARPNESS_TOL or any(abs(k - 0.25) > SHARPNESS_TOL for k in ends)
        worst = min(worst, 0.25 - top)
    return CheckResult("sharpness", len(ivs), bad, worst)


def check_midpoint_bound(rng, n_intervals=20) -> CheckResult:
    reports = [
        bounds.midpoint_bound(m, iv)
        for m in standard_models()
        for iv in random_intervals(rng, n_intervals)
    ]
    return _tally("midpoint_bound", reports)


def check_weighted(rng, n_intervals=4, n_x=4) -> CheckResult:
    reports = []
    bracket_bad = 0
    for w in standard_weights():
        for iv in random_intervals(rng, n_intervals, 0.5, 5.0):
            for x in rng.uniform(iv.a, iv.b, size=n_x):
                x = float(x)
                br = bounds.weighted_bracket(iv, w, x)
                ref = oracle.integrate_abs_kernel(w, x, iv.a, iv.b).value / abs(x)
                bracket_bad += abs(br - ref) > BRACKET_RTOL * max(abs(ref), 1e-300)
                for m in standard_models():
                    reports.append(bounds.weighted_bound(m, iv, w, x))
    res = _tally("weighted_bound", reports)
    res.violations += bracket_bad
    res.detail = f"bracket_mismatches={bracket_bad}"
    return res


def check_weighted_midpoint(rng, n_intervals=4) -> CheckResult:
    reports = []
    weights = standard_weights() + [bounds.bump_weight(1.9, 0.05)]
    for w in weights:
        ivs = [fm.Interval(1.0, 2.0)] if w.description.startswith("bump") else \
            random_intervals(rng, n_intervals, 0.5, 5.0)
        for iv in ivs:
            for m in standard_models():
                reports.append(bounds.weighted_midpoint_bound(m, iv, w))
    return _tally("weighted_centroid_bound", reports)


def check_quadrature(rng, n_intervals=5) -> CheckResult:
    cases = bad = 0
    worst = math.inf
    for m in standard_models():
        for iv in random_intervals(rng, n_intervals, 0.5, 5.0):
            ref = quadrature.reference_integral(m, iv)
            for n in (1, 2, 4, 16, 64):
                for rule in quadrature.RULES:
                    part = quadrature.uniform_partition(iv, n, rule)
                    t1, t2, t3 = quadrature.remainder_bounds(m, part)
                    err = abs(ref - quadrature.s_n(m, part))
                    cases += 1
                    ordered = t1 <= t2 * (1 + 1e-12) and t2 <= t3 * (1 + 1e-12)
                    bad += err > t1 + QUAD_ATOL or not ordered
                    worst = min(worst, t1 - err)
                mid = quadrature.uniform_partition(iv, n, "midpoint")
                tight, coarse = quadrature.midpoint_remainder_bound(m, mid)
                merr = abs(ref - quadrature.m_n(m, mid))
                cases += 1
                bad += merr > tight + QUAD_ATOL or tight > coarse * (1 + 1e-12)
                worst = min(worst, tight - merr)
    return CheckResult("quadrature_certificates", cases, bad, worst)


def check_pompeiu(rng, n_pairs=20) -> CheckResult:
    cases = bad = 0
    worst = math.inf
    for m in standard_models():
        for iv in random_intervals(rng, n_pairs, 0.5, 5.0):
            cases += 1
            try:
                pt = pompeiu.find_pompeiu_point(m, iv.a, iv.b)
            except pompeiu.NoRootLocated:
                bad += 1
                continue
            sec, tan = pompeiu.y_intercepts(m, iv.a, iv.b, pt.xi)
            gap = abs(sec - tan)
            bad += not (iv.a < pt.xi < iv.b) or gap > pompeiu.DEFAULT_TOL
            worst = min(worst, pompeiu.DEFAULT_TOL - gap)
    return CheckResult("pompeiu_point", cases, bad, worst)


def check_means(rng, n_pairs=1000) -> CheckResult:
    cases = bad = 0
    worst = math.inf
    for _ in range(n_pairs):
        a, b = rng.uniform(*INTERVAL_RANGE, size=2)
        if a == b:
            continue
        pair = PositivePair(a, b)
        cases += 1
        bad += not chain_holds(pair, strict=True)
        reports = [bounds.mean_inequality_62(pair, p) for p in MEANS_P]
        reports += [bounds.mean_inequality_63(pair), bounds.mean_inequality_64(pair)]
        for r in reports:
            cases += 1
            bad += not r.holds()
            worst = min(worst, r.slack)
    return CheckResult("special_means", cases, bad, worst)


CHECKS: list[tuple[str, Callable]] = [
    ("main_bound", check_main_bound),
    ("affine_endpoint_equality", check_affine_equality),
    ("sharpness", check_sharpness),
    ("midpoint_bound", check_midpoint_bound),
    ("weighted_bound", check_weighted),
    ("weighted_centroid_bound", check_weighted_midpoint),
    ("quadrature_certificates", check_quadrature),
    ("pompeiu_point", check_pompeiu),
    ("special_means", check_means),
]


def run_all(seed: int = DEFAULT_SEED, rhs_scale: float = 1.0, only: Optional[list[str]] = None) -> list[CheckResult]:
    """Run every check with its own child generator so results do not
    depend on which checks are selected."""
    seeds = np.random.SeedSequence(seed).spawn(len(CHECKS))
    out = []
    for (name, fn), ss in zip(CHECKS, seeds):
        if only and name not in only:
            continue
        rng = np.random.default_rng(ss)
        if fn is check_main_bound:
            out.append(fn(rng, rhs_scale=rhs_scale))
        else:
            out.append(fn(rng))
    return out
