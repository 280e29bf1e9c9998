"""How tight is the main bound?

We evaluate |A f(x)/x - mean of f| against its bound across [1, 2] for a few
functions.  For affine functions the ratio lhs/rhs reaches 1 at the
endpoints, which is why the constant 1/4 cannot be lowered.
"""

from pompeiu_ostrowski import bounds, funcmodel as fm
from pompeiu_ostrowski.funcmodel import Interval

iv = Interval(1, 2)
xs = bounds.x_grid(iv, 11)
for model in (fm.affine(2, 3), fm.reciprocal(), fm.logarithm(), fm.power(3)):
    reports = bounds.pompeiu_ostrowski_sweep(model, iv, xs)
    ratios = " ".join(f"{r.lhs / r.rhs:5.3f}" for r in reports)
    print(f"{model.name:>10}  lhs/rhs over x: {ratios}")

print()
print("midpoint bound:", bounds.midpoint_bound(fm.reciprocal(), iv).as_dict())

# weighted version, with the weight t, evaluated at the weighted centroid
w = bounds.parse_weight("t")
r = bounds.weighted_midpoint_bound(fm.logarithm(), iv, w)
print(f"weighted centroid bound for log with w(t)=t: lhs={r.lhs:.6g} rhs={r.rhs:.6g} at x={r.x:.6g}")

# the special-means corollaries on (1, 2)
for r in (bounds.mean_inequality_62((1, 2), 2),
          bounds.mean_inequality_63((1, 2)),
          bounds.mean_inequality_64((1, 2))):
    print(f"id {r.equation_id}: lhs={r.lhs:.9f} rhs={r.rhs:.9f} holds={r.holds()}")
