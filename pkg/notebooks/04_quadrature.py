"""Quadrature with a certified remainder.

The rule S_n weights f(xi)/xi by (x_{i+1}^2 - x_i^2)/2.  Its error has three
nested upper bounds.  The coarsest one halves whenever n doubles, which lets
us pick n in advance for a requested tolerance.
"""

import math

from pompeiu_ostrowski import funcmodel as fm, quadrature as q
from pompeiu_ostrowski.funcmodel import Interval

iv = Interval(1, 2)
model = fm.reciprocal()
print(f"{'n':>5} {'S_n':>14} {'error':>10} {'tier1':>10} {'tier2':>10} {'tier3':>10}")
for n in (1, 2, 4, 8, 16, 64, 256):
    part = q.uniform_partition(iv, n)
    t1, t2, t3 = q.remainder_bounds(model, part)
    s = q.s_n(model, part)
    print(f"{n:>5} {s:14.10f} {abs(s - math.log(2)):10.2e} {t1:10.2e} {t2:10.2e} {t3:10.2e}")

res = q.integrate_with_certificate(model, iv, 1e-3)
print(f"\nfor eps = 1e-3: n = {res.n}, value = {res.value:.10f}, "
      f"actual error {res.actual_error:.2e} ({res.certificate})")

# a custom family: the sup-norm is estimated numerically, so the result is flagged
exp_model = fm.custom(math.exp, math.exp, name="exp", positive_only=True)
res = q.integrate_with_certificate(exp_model, iv, 1e-2)
print(f"exp on [1, 2]: n = {res.n}, error {res.actual_error:.2e}, {res.certificate}")
