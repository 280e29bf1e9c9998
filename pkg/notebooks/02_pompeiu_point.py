"""Pompeiu's mean value point.

For f on an interval not containing 0, there is a xi between x1 and x2
where the tangent to f at xi meets the y-axis at the same height as the
secant through (x1, f(x1)) and (x2, f(x2)).  For 1/t on [1, 2] that point is
the harmonic mean 4/3, and for t^2 it is the geometric mean sqrt(2).
"""

import math

from pompeiu_ostrowski import find_pompeiu_point, funcmodel as fm
from pompeiu_ostrowski.pompeiu import y_intercepts

cases = [
    (fm.reciprocal(), 1, 2, 4 / 3),
    (fm.power(2), 1, 2, math.sqrt(2)),
    (fm.logarithm(), 1, math.e, None),
    (fm.reciprocal(), -3, -1, -1.5),
]
for model, x1, x2, expected in cases:
    pt = find_pompeiu_point(model, x1, x2)
    secant, tangent = y_intercepts(model, x1, x2, pt.xi)
    note = "" if expected is None else f"  (expected {expected:.12f})"
    print(f"{model.name:>12} on [{x1}, {x2:.4g}]: xi = {pt.xi:.12f}{note}")
    print(f"{'':>12}   secant meets y-axis at {secant:.12f}, tangent at {tangent:.12f}")
