"""Special means of two positive numbers.

All means are symmetric, so :class:`PositivePair` stores its arguments in
ascending order.  Every mean returns ``a`` for a degenerate pair ``a == b``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# half-width of the window around p = -1 and p = 0 where L_p switches to
# its limit (L and I respectively)
P_SWITCH = 1e-8


@dataclass(frozen=True, init=False)
class PositivePair:
    a: float
    b: float

    def __init__(self, a: float, b: float):
        a = float(a)
        b = float(b)
        if not (a > 0 and b > 0) or not (math.isfinite(a) and math.isfinite(b)):
            raise ValueError(f"means need positive finite arguments, got ({a}, {b})")
        lo, hi = (a, b) if a <= b else (b, a)
        object.__setattr__(self, "a", lo)
        object.__setattr__(self, "b", hi)

    @property
    def degenerate(self) -> bool:
        return self.a == self.b


def _pair(pair) -> PositivePair:
    if isinstance(pair, PositivePair):
        return pair
    return PositivePair(*pair)


def arithmetic_mean(pair) -> float:
    p = _pair(pair)
    return 0.5 * (p.a + p.b)


def geometric_mean(pair) -> float:
    p = _pair(pair)
    if p.degenerate:
        return p.a
    prod = p.a * p.b
    if math.isfinite(prod) and prod > 0:
        return math.sqrt(prod)
    return math.sqrt(p.a) * math.sqrt(p.b)


def harmonic_mean(pair) -> float:
    p = _pair(pair)
    return 2.0 * p.a * p.b / (p.a + p.b)


def logarithmic_mean(pair) -> float:
    """``(b - a) / (ln b - ln a)``.

    The log ratio goes through ``log1p`` so close pairs keep their digits.
    """
    p = _pair(pair)
    if p.degenerate:
        return p.a
    d = p.b - p.a
    return d / math.log1p(d / p.a)


def identric_mean(pair) -> float:
    """``(1/e) (b^b / a^a)^(1/(b-a))`` evaluated without forming ``b^b``.

    Uses ``ln I = ln b - 1 + a / L`` which follows from splitting
    ``b ln b - a ln a = (b - a) ln b + a ln(b/a)``.
    """
    p = _pair(pair)
    if p.degenerate:
        return p.a
    return p.b * math.exp(p.a / logarithmic_mean(p) - 1.0)


def p_logarithmic_mean(pair, p: float) -> float:
    """The p-logarithmic mean ``L_p``.

    Inside ``P_SWITCH`` of ``p = -1`` (resp. ``p = 0``) this returns the
    logarithmic (resp. identric) mean, which are the continuous extensions.
    """
    pp = _pair(pair)
    p = float(p)
    if pp.degenerate:
        return pp.a
    if abs(p + 1.0) < P_SWITCH:
        return logarithmic_mean(pp)
    if abs(p) < P_SWITCH:
        return identric_mean(pp)
    a, b = pp.a, pp.b
    q = p + 1.0
    r = math.log(a / b)
    # b^q - a^q = -b^q * expm1(q * ln(a/b)); the ratio below is positive
    # for either sign of q
    log_pow_mean = q * math.log(b) + math.log(-math.expm1(q * r) / q) - math.log(b - a)
    return math.exp(log_pow_mean / p)


def means_table(pair) -> dict[str, float]:
    """All five classical means keyed by their usual letters."""
    p = _pair(pair)
    return {
        "H": harmonic_mean(p),
        "G": geometric_mean(p),
        "L": logarithmic_mean(p),
        "I": identric_mean(p),
        "A": arithmetic_mean(p),
    }


def chain_holds(pair, strict: bool = True) -> bool:
    """Check ``H <= G <= L <= I <= A`` (strictly if ``strict``)."""
    vals = list(means_table(pair).values())
    if strict:
        return all(x < y for x, y in zip(vals, vals[1:]))
    return all(x <= y for x, y in zip(vals, vals[1:]))
