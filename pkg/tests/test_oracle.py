import math

import pytest

from pompeiu_ostrowski import oracle
from pompeiu_ostrowski.bounds import bump_weight, constant_weight, power_weight


class TestIntegrate:
    def test_reciprocal_is_ln2(self):
        res = oracle.integrate(lambda t: 1.0 / t, 1.0, 2.0, 1e-10)
        assert res.value == pytest.approx(math.log(2.0), abs=1e-10)
        assert res.est_error <= 1e-10
        assert res.evaluations > 0

    def test_square(self):
        assert oracle.integrate(lambda t: t * t, 1.0, 2.0, 1e-10).value == pytest.approx(7 / 3, abs=1e-10)

    @pytest.mark.parametrize("c", [-3.0, 0.5, 1.0, 7.25])
    def test_empty_interval(self, c):
        res = oracle.integrate(math.exp, c, c, 1e-10)
        assert res.value == 0.0
        assert res.evaluations == 0

    def test_reversed_limits_negate(self):
        fwd = oracle.integrate(math.log, 1.0, 2.0).value
        back = oracle.integrate(math.log, 2.0, 1.0).value
        assert back == -fwd

    def test_log_integral(self):
        # ∫ ln t = t ln t - t
        assert oracle.integrate(math.log, 1.0, 2.0).value == pytest.approx(2 * math.log(2) - 1, abs=1e-10)

    def test_nonpositive_tol_rejected(self):
        with pytest.raises(ValueError):
            oracle.integrate(math.sin, 0.0, 1.0, 0.0)

    def test_depth_exceeded_on_nonintegrable(self):
        with pytest.raises(oracle.DepthExceeded):
            oracle.integrate(lambda t: 1.0 / t if t != 0 else 0.0, 0.0, 1.0, 1e-10)

    @pytest.mark.parametrize("g, a, b", [
        (lambda t: 1.0 / t, 1.0, 2.0),
        (math.log, 1.0, 2.0),
        (lambda t: math.sin(3 * t) * t, -1.0, 2.5),
    ])
    @pytest.mark.parametrize("c_frac", [0.1, 0.37, 0.5, 0.93])
    def test_split_additivity(self, g, a, b, c_frac):
        tol = 1e-10
        c = a + c_frac * (b - a)
        whole = oracle.integrate(g, a, b, tol).value
        parts = oracle.integrate(g, a, c, tol).value + oracle.integrate(g, c, b, tol).value
        assert abs(whole - parts) <= 2 * tol

    def test_linearity(self):
        tol = 1e-10
        g1 = lambda t: 1.0 / t
        g2 = math.log
        alpha, beta = 2.5, -0.75
        combo = oracle.integrate(lambda t: alpha * g1(t) + beta * g2(t), 1.0, 2.0, tol).value
        sep = alpha * oracle.integrate(g1, 1.0, 2.0, tol).value + beta * oracle.integrate(g2, 1.0, 2.0, tol).value
        assert abs(combo - sep) <= 2 * tol


class TestWeighted:
    def test_one_times_t(self):
        res = oracle.integrate_weighted(lambda t: 1.0, power_weight(1), 1.0, 2.0, 1e-10)
        assert res.value == pytest.approx(1.5, abs=1e-10)

    def test_t_times_t(self):
        res = oracle.integrate_weighted(lambda t: t, power_weight(1), 1.0, 2.0, 1e-10)
        assert res.value == pytest.approx(7 / 3, abs=1e-10)

    def test_zero_weight(self):
        res = oracle.integrate_weighted(math.exp, constant_weight(0.0), 1.0, 2.0)
        assert res.value == 0.0

    def test_plain_callable_weight(self):
        res = oracle.integrate_weighted(lambda t: 1.0, lambda t: t, 1.0, 2.0)
        assert res.value == pytest.approx(1.5, abs=1e-10)

    def test_narrow_bump_not_missed(self):
        # the bump sits between the initial Simpson nodes; breakpoints must catch it
        w = bump_weight(1.61, 0.003)
        # ∫ (1-u^2)^2 du over [-1, 1] = 16/15
        expected = 16 / 15 * 0.003
        res = oracle.integrate_weighted(lambda t: 1.0, w, 1.0, 2.0)
        assert res.value == pytest.approx(expected, abs=1e-12)


class TestAbsKernel:
    def test_spot_value(self):
        # ∫_1^2 t |1.5 - t| dt = 0.145833... + 0.229166... = 3/8
        res = oracle.integrate_abs_kernel(power_weight(1), 1.5, 1.0, 2.0)
        assert res.value == pytest.approx(0.375, abs=1e-12)

    @pytest.mark.parametrize("x", [1.0, 1.2, 1.5, 1.9, 2.0])
    def test_uniform_weight_closed_form(self, x):
        expected = ((x - 1.0) ** 2 + (2.0 - x) ** 2) / 2.0
        res = oracle.integrate_abs_kernel(constant_weight(1.0), x, 1.0, 2.0)
        assert res.value == pytest.approx(expected, abs=1e-12)
