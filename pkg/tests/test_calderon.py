import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from orliczkit.calderon import (
    Average,
    CalderonSum,
    HardyHead,
    HardyTail,
    JointHardy,
    distribution_of,
    sandwich_calderon,
    sandwich_hardy_head,
    tail_reduction_bound,
)
from orliczkit.stepfn import StepFunction

CHI = StepFunction.indicator(1.0, 1.0)


def random_decreasing(seed, max_steps=8):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, max_steps + 1))
    breaks = np.cumsum(rng.lognormal(0.0, 1.0, n))
    values = np.sort(rng.lognormal(0.0, 1.0, n))[::-1]
    return StepFunction(breaks, values)


class TestOperators:
    def test_head_on_indicator(self):
        # head(p,r) chi = (p/r)^{1/r} on the support, C t^{-1/p} beyond
        op = HardyHead(2.0, 1.0)
        assert abs(op(CHI, 0.5) - 2.0) < 1e-12
        assert abs(op(CHI, 1.0) - 2.0) < 1e-12
        assert abs(op(CHI, 4.0) - 2.0 * 4.0 ** -0.5) < 1e-12

    def test_head_constant_inside_support(self):
        op = HardyHead(2.0, 3.0)
        expect = (2.0 / 3.0) ** (1.0 / 3.0)
        for t in [0.1, 0.5, 1.0]:
            assert abs(op(CHI, t) - expect) < 1e-12

    def test_tail_on_indicator(self):
        # tail(q,r) chi(t) = ((q/r)(t^{-r/q} - 1) * ... ) closed form:
        # (t^{-r/q} int_t^1 s^{r/q-1} ds)^{1/r} = ((q/r)(1 - t^{r/q}))^{1/r} t^{-1/q}
        op = HardyTail(2.0, 1.0)
        t = 0.25
        expect = 2.0 * (1.0 - t ** 0.5) / t ** 0.5
        assert abs(op(CHI, t) - expect) < 1e-12
        assert op(CHI, 1.0) == 0.0
        assert op(CHI, 2.0) == 0.0

    def test_average_is_head_1_1(self):
        f = random_decreasing(5)
        for t in [0.3, 1.0, 7.0]:
            assert abs(Average()(f, t) - HardyHead(1.0, 1.0)(f, t)) < 1e-12

    def test_sum_and_joint_compose(self):
        f = random_decreasing(11)
        s = CalderonSum(2.0, 3.0)
        j = JointHardy(2.0, 1.0, 3.0, 2.0)
        for t in [0.2, 1.5]:
            assert abs(s(f, t) - (Average()(f, t) + HardyTail(2.0, 3.0)(f, t))) < 1e-12
            assert abs(j(f, t) - (HardyHead(2.0, 1.0)(f, t) + HardyTail(3.0, 2.0)(f, t))) < 1e-12

    def test_tail_form_exact(self):
        C, p = HardyHead(2.0, 1.0).tail_form(CHI)
        assert abs(C - 2.0) < 1e-12 and p == 2.0
        C, p = CalderonSum(2.0, 1.0).tail_form(CHI)
        assert abs(C - 1.0) < 1e-12 and p == 1.0

    def test_head_blowup_flags(self):
        assert HardyHead(2.0, 1.0).head_blowup(CHI) == 0.0
        assert HardyTail(3.0, 2.0).head_blowup(CHI) == 1.0 / 3.0
        assert CalderonSum(4.0, 1.0).head_blowup(CHI) == 0.25

    def test_rejects_nonpositive_t(self):
        with pytest.raises(ValueError):
            HardyHead(2.0, 1.0)(CHI, 0.0)

    def test_scaled_root_log_path(self):
        # huge integrand values must not overflow the outer power
        # inner integral ~1e140 finite, t^{-r/q} ~1e180: plain product
        # overflows but the true value is ~10^{53}
        # inner integral ~6.7e89 finite; at t = 1e-150, t^{-3/2} = 1e225 so
        # the plain product exceeds 1e300 and the log path takes over
        f = StepFunction([1e-100], [1e40])
        op = HardyTail(4.0, 6.0)
        v = op(f, 1e-150)
        assert math.isfinite(v) and v > 1e50


class TestDistributionOf:
    def test_indicator_exact(self):
        # head(2,1) chi = 2 on (0,1], 2 t^{-1/2} after; m(level=1) solves
        # 2 t^{-1/2} = 1 -> t = 4
        m = distribution_of(HardyHead(2.0, 1.0), CHI, 1.0)
        assert abs(m - 4.0) < 1e-6

    def test_matches_tail_form_beyond_bracket(self):
        # tiny level met far beyond the support: analytic branch (C/level)^p
        op = HardyHead(3.0, 2.0)
        C, p = op.tail_form(CHI)
        level = 1e-8
        m = distribution_of(op, CHI, level)
        assert abs(m / (C / level) ** p - 1.0) < 1e-6

    def test_level_above_sup_gives_zero(self):
        assert distribution_of(HardyHead(2.0, 1.0), CHI, 10.0) == 0.0

    def test_blowup_levels_resolved(self):
        # the tail part blows up like t^{-1/q} as t -> 0: every level is met
        op = CalderonSum(2.0, 1.0)
        m = distribution_of(op, CHI, 1e3)
        assert 0.0 < m < 1e-4


class TestSandwiches:
    @pytest.mark.parametrize("p", [2.0, 4.0])
    @pytest.mark.parametrize("r", [1.0, 2.0])
    def test_hardy_head_bracket(self, p, r):
        # the lower estimate needs r <= p; (2,3) is excluded deliberately
        for seed in range(8):
            g = random_decreasing(seed)
            for t in np.geomspace(1e-2, 1e2, 9):
                lo, mid, up = sandwich_hardy_head(p, r, g, t)
                if math.isinf(mid):
                    continue
                assert lo <= mid * (1 + 1e-9) + 1e-300
                assert mid <= up * (1 + 1e-9) + 1e-300

    def test_hardy_head_lower_fails_for_r_above_p(self):
        # head(2,3) chi == (2/3)^{1/3} ~ 0.87 everywhere on (0,1]; at levels
        # above that the distribution is 0 but the lower bound is positive
        lo, mid, up = sandwich_hardy_head(2.0, 3.0, CHI, 0.95)
        assert mid == 0.0 and lo > 0.0

    @pytest.mark.parametrize("q", [2.0, 3.0])
    @pytest.mark.parametrize("r", [1.0, 2.0, 3.0])
    def test_calderon_bracket(self, q, r):
        for seed in range(8):
            g = random_decreasing(seed)
            for t in np.geomspace(1e-2, 1e2, 9):
                lo, mid, up = sandwich_calderon(q, r, g, t)
                if math.isinf(mid):
                    continue
                assert lo <= mid * (1 + 1e-9) + 1e-300
                assert mid <= up * (1 + 1e-9) + 1e-300


class TestReduction:
    def test_equality_at_r_equals_q(self):
        g = random_decreasing(3)
        for t in [0.2, 1.0, 5.0]:
            lhs, rhs = tail_reduction_bound(2.0, 2.0, g, t)
            assert abs(lhs - rhs) < 1e-12 * max(1.0, rhs)

    @pytest.mark.parametrize("r", [2.0, 3.0, 4.0])
    def test_bound_holds(self, r):
        for seed in range(10):
            g = random_decreasing(seed)
            for t in np.geomspace(1e-2, 1e2, 9):
                lhs, rhs = tail_reduction_bound(2.0, r, g, t)
                assert lhs <= rhs * (1 + 1e-9) + 1e-300

    def test_rejects_r_below_q(self):
        with pytest.raises(ValueError):
            tail_reduction_bound(3.0, 2.0, CHI, 1.0)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=2**31 - 1),
       st.sampled_from([(2.0, 1.0), (2.0, 2.0), (4.0, 2.0), (4.0, 3.0)]),
       st.floats(min_value=0.05, max_value=5.0))
def test_head_dominates_pointwise(seed, pr, t):
    # head(p,r) g(t) >= (p/r)^{1/r} g(t) for nonincreasing g
    p, r = pr
    g = random_decreasing(seed)
    assert HardyHead(p, r)(g, t) >= (p / r) ** (1.0 / r) * g(t) * (1 - 1e-12)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=2**31 - 1),
       st.floats(min_value=0.05, max_value=5.0))
def test_sum_dominates_average(seed, t):
    g = random_decreasing(seed)
    assert CalderonSum(2.0, 3.0)(g, t) >= Average()(g, t) >= g(t) * (1 - 1e-12)
