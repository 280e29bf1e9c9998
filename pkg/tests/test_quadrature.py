import math

import numpy as np
import pytest

from pompeiu_ostrowski import funcmodel as fm, oracle, quadrature as q
from pompeiu_ostrowski.funcmodel import Interval

IV12 = Interval(1, 2)
LN2 = math.log(2)
FAMILIES = [fm.affine(2, 3), fm.power(2), fm.power(-2), fm.reciprocal(), fm.logarithm()]


class TestPartition:
    def test_uniform_midpoint(self):
        p = q.uniform_partition(IV12, 2, "midpoint")
        assert p.nodes == (1.0, 1.5, 2.0)
        assert p.intermediates == (1.25, 1.75)

    def test_uniform_left(self):
        p = q.uniform_partition(IV12, 1, "left")
        assert p.nodes == (1.0, 2.0) and p.intermediates == (1.0,)

    def test_uniform_right_wider(self):
        p = q.uniform_partition(Interval(1, 3), 4, "midpoint")
        assert p.intermediates == (1.25, 1.75, 2.25, 2.75)
        assert np.allclose(np.diff(p.nodes), 0.5)

    def test_zero_cells(self):
        with pytest.raises(ValueError):
            q.uniform_partition(IV12, 0)

    def test_negative_interval_rejected(self):
        with pytest.raises(fm.DomainError):
            q.uniform_partition(Interval(-2, -1), 3)

    @pytest.mark.parametrize("nodes, xis", [
        ((1, 1, 2), (1, 1.5)),
        ((2, 1), (1.5,)),
        ((1, 2), (2.5,)),
        ((1, 2, 3), (1.5,)),
    ])
    def test_invalid(self, nodes, xis):
        with pytest.raises(ValueError):
            q.Partition(nodes, xis)

    def test_from_nodes(self):
        p = q.Partition.from_nodes([1, 1.2, 2], "right")
        assert p.intermediates == (1.2, 2.0)


class TestSn:
    @pytest.mark.parametrize("rule", q.RULES)
    def test_exact_for_identity(self, rule):
        p = q.Partition.from_nodes([0.5, 0.7, 1.9, 2.0, 4.5], rule)
        assert q.s_n(fm.power(1), p) == pytest.approx((4.5**2 - 0.25) / 2, rel=1e-15)
        assert q.remainder_bounds(fm.power(1), p) == (0.0, 0.0, 0.0)

    def test_reciprocal_single_cell(self):
        p = q.Partition((1, 2), (1.5,))
        # f(xi)/xi = 1/2.25, times (4 - 1)/2
        assert q.s_n(fm.reciprocal(), p) == pytest.approx(2 / 3, abs=1e-12)

    def test_constant_two_cells(self):
        p = q.uniform_partition(IV12, 2, "midpoint")
        assert q.s_n(fm.affine(0, 1), p) == pytest.approx(1.0, abs=1e-15)


class TestMn:
    def test_affine_exact(self):
        p = q.Partition.from_nodes([1, 1.1, 1.6, 2])
        assert q.m_n(fm.affine(3, -2), p) == pytest.approx(3 * 1.5 - 2, abs=1e-14)

    def test_reciprocal(self):
        assert q.m_n(fm.reciprocal(), q.uniform_partition(IV12, 1)) == pytest.approx(2 / 3, abs=1e-15)
        assert q.m_n(fm.reciprocal(), q.uniform_partition(IV12, 2)) == pytest.approx(0.4 + 0.5 / 1.75, abs=1e-15)
        assert q.m_n(fm.reciprocal(), q.uniform_partition(IV12, 2)) == pytest.approx(0.685714, abs=1e-6)

    @pytest.mark.parametrize("model", FAMILIES, ids=str)
    def test_equals_sn_at_midpoints(self, model):
        p = q.Partition.from_nodes([0.5, 0.8, 1.9, 2.0, 3.3], "midpoint")
        assert q.s_n(model, p) == pytest.approx(q.m_n(model, p), rel=1e-14)


class TestRemainderBounds:
    def test_reciprocal_single_cell(self):
        t1, t2, t3 = q.remainder_bounds(fm.reciprocal(), q.Partition((1, 2), (1.5,)))
        assert (t1, t2, t3) == pytest.approx((1 / 3, 2 / 3, 1.0), abs=1e-15)

    def test_reciprocal_tier3_n100(self):
        t3 = q.remainder_bounds(fm.reciprocal(), q.uniform_partition(IV12, 100))[2]
        assert t3 == pytest.approx(0.01, rel=1e-13)

    def test_midpoint_bounds(self):
        tight, coarse = q.midpoint_remainder_bound(fm.reciprocal(), q.uniform_partition(IV12, 1))
        assert (tight, coarse) == pytest.approx((1 / 3, 0.5), abs=1e-15)
        tight, coarse = q.midpoint_remainder_bound(fm.reciprocal(), q.uniform_partition(IV12, 2))
        assert tight == pytest.approx(0.1 + 0.25 / 3.5, abs=1e-15)
        assert coarse == pytest.approx(0.25, abs=1e-15)

    def test_midpoint_zero_norm(self):
        assert q.midpoint_remainder_bound(fm.power(1), q.uniform_partition(IV12, 3)) == (0.0, 0.0)

    def test_midpoint_tight_equals_tier1(self):
        p = q.Partition.from_nodes([1, 1.3, 1.35, 2.2, 3])
        tight, _ = q.midpoint_remainder_bound(fm.logarithm(), p)
        assert tight == pytest.approx(q.remainder_bounds(fm.logarithm(), p)[0], rel=1e-14)

    @pytest.mark.parametrize("model", FAMILIES, ids=str)
    def test_certified_and_ordered(self, model):
        rng = np.random.default_rng(17)
        for _ in range(30):
            a = rng.uniform(0.2, 4)
            n = int(rng.integers(1, 12))
            inner = np.sort(rng.uniform(a, a + 3, size=n - 1))
            nodes = np.unique(np.concatenate([[a], inner, [a + 3]]))
            xis = [rng.uniform(lo, hi) for lo, hi in zip(nodes, nodes[1:])]
            p = q.Partition(tuple(nodes), tuple(xis))
            ref = oracle.integrate(model.f, p.a, p.b).value
            t1, t2, t3 = q.remainder_bounds(model, p)
            assert abs(ref - q.s_n(model, p)) <= t1 + 1e-9
            assert t1 <= t2 * (1 + 1e-14) and t2 <= t3 * (1 + 1e-14)
            mp = q.Partition.from_nodes(nodes)
            tight, coarse = q.midpoint_remainder_bound(model, mp)
            assert abs(ref - q.m_n(model, mp)) <= tight + 1e-9
            assert tight <= coarse * (1 + 1e-14)

    @pytest.mark.parametrize("n", [1, 3, 10, 50, 500])
    def test_tier3_halves(self, n):
        t = q.remainder_bounds(fm.logarithm(), q.uniform_partition(IV12, n))[2]
        t2 = q.remainder_bounds(fm.logarithm(), q.uniform_partition(IV12, 2 * n))[2]
        assert t2 / t == pytest.approx(0.5, rel=1e-12)


class TestSizing:
    def test_reciprocal(self):
        assert q.n_for_tolerance(fm.reciprocal(), IV12, 0.01) == 100
        assert q.n_for_tolerance(fm.reciprocal(), IV12, 1.0) == 1

    @pytest.mark.parametrize("eps", [1.0, 1e-3, 1e-9])
    def test_identity(self, eps):
        assert q.n_for_tolerance(fm.power(1), IV12, eps) == 1

    @pytest.mark.parametrize("model", FAMILIES, ids=str)
    @pytest.mark.parametrize("eps", [0.3, 0.013, 1e-4])
    def test_smallest(self, model, eps):
        iv = Interval(0.5, 2.5)
        n = q.n_for_tolerance(model, iv, eps)
        norm, _ = fm.deviation_norm(model, iv)
        coarse = lambda k: norm * iv.length**2 / (2 * iv.a * k)
        assert coarse(n) <= eps
        assert n == 1 or coarse(n - 1) > eps

    def test_bad_eps(self):
        with pytest.raises(ValueError):
            q.n_for_tolerance(fm.reciprocal(), IV12, 0)


class TestCertificate:
    def test_reciprocal(self):
        res = q.integrate_with_certificate(fm.reciprocal(), IV12, 0.01)
        assert res.n == 100
        assert abs(res.value - LN2) <= 0.01
        assert res.bound_tier3 == pytest.approx(0.01, rel=1e-13)
        assert res.actual_error <= res.bound_tier1
        assert res.reference == pytest.approx(LN2, abs=1e-10)
        assert res.rigorous and res.certificate == "certificate"

    def test_identity_exact(self):
        res = q.integrate_with_certificate(fm.power(1), IV12, 0.001)
        assert res.value == 1.5
        assert (res.bound_tier1, res.bound_tier2, res.bound_tier3) == (0.0, 0.0, 0.0)

    def test_logarithm(self):
        res = q.integrate_with_certificate(fm.logarithm(), IV12, 0.05)
        assert abs(res.value - (2 * LN2 - 1)) <= 0.05
        assert res.bound_tier3 <= 0.05

    def test_estimated_certificate_flag(self):
        model = fm.custom(math.exp, math.exp, positive_only=True)
        res = q.integrate_with_certificate(model, IV12, 0.05)
        assert not res.rigorous
        assert res.certificate == "estimated certificate"
        assert res.actual_error <= res.bound_tier1

    def test_midpoint_rule_tiers(self):
        res = q.evaluate(fm.reciprocal(), q.uniform_partition(IV12, 2), "midpoint")
        assert res.rule == "midpoint"
        assert res.value == pytest.approx(0.685714, abs=1e-6)
        assert res.bound_tier1 <= res.bound_tier2 <= res.bound_tier3
        assert res.actual_error == pytest.approx(abs(res.reference - res.value), abs=0)

    def test_unknown_rule(self):
        with pytest.raises(ValueError):
            q.evaluate(fm.reciprocal(), q.uniform_partition(IV12, 2), "gauss")
