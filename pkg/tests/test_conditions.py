import math

import pytest

from orliczkit.conditions import (
    ConditionReport,
    check_average,
    check_cianchi_lower,
    check_cianchi_upper,
    check_stepanov_pair,
    check_theorem_joint,
    check_zs_lower,
    check_zs_upper,
    sup_search,
)
from orliczkit.verify import worked_example_pair
from orliczkit.young import power_young

E = math.e
CUBE = power_young(3.0)


class TestSupSearch:
    def test_exact_maximum(self):
        res = sup_search(lambda t: t / (1.0 + t) ** 2)
        assert not res["divergent"]
        assert abs(res["sup"] - 0.25) < 1e-6
        assert abs(res["argmax"] - 1.0) < 1e-2

    def test_growth_detected(self):
        res = sup_search(lambda t: math.sqrt(t))
        assert res["divergent"]
        assert res["side"] == "top"
        assert abs(res["rate"] - 0.5) < 0.05

    def test_slow_growth_detected(self):
        res = sup_search(lambda t: math.log(1.0 + t))
        assert res["divergent"]
        assert res["side"] == "top"
        assert res["rate"] < 0.2

    def test_blowup_at_zero_detected(self):
        res = sup_search(lambda t: t ** -0.5)
        assert res["divergent"]
        assert res["side"] == "bottom"

    def test_curve_exported(self):
        res = sup_search(lambda t: t / (1.0 + t) ** 2)
        assert len(res["curve"]) > 10
        t0, v0 = res["curve"][0]
        assert v0 == pytest.approx(t0 / (1.0 + t0) ** 2)


class TestPurePowers:
    def test_same_cube_holds_both_endpoints(self):
        low = check_zs_lower(CUBE, CUBE, 2.0)
        up = check_zs_upper(CUBE, CUBE, 4.0)
        assert low.holds and up.holds
        assert abs(low.constant - 1.0) < 1e-6
        assert abs(up.constant - 1.0) < 1e-6

    def test_power_below_p0_fails(self):
        y = power_young(1.5)
        assert not check_zs_lower(y, y, 2.0).holds

    def test_power_above_p1_fails(self):
        y = power_young(5.0)
        assert not check_zs_upper(y, y, 4.0).holds

    def test_endpoint_power_inner_divergence(self):
        # Phi = t^2 at the p = 2 endpoint: the inner integral is int ds/s
        rep = check_zs_lower(power_young(2.0), power_young(2.0), 2.0)
        assert not rep.holds
        assert rep.mode == "inner-divergence"

    def test_average_condition(self):
        assert check_average(CUBE, CUBE).holds


class TestWorkedPair:
    """Power-log pair: t^5 below e, t^4 (log t)^beta above, beta = 5 vs
    interior weights; bounded iff r > 1 at the lower endpoint."""

    def setup_method(self):
        self.phi1, self.phi2 = worked_example_pair()

    def test_cianchi_lower_r1_diverges(self):
        rep = check_cianchi_lower(self.phi1, self.phi2, 4.0, 1.0)
        assert not rep.holds
        assert rep.mode == "inner-divergence"

    def test_cianchi_lower_r2_holds(self):
        rep = check_cianchi_lower(self.phi1, self.phi2, 4.0, 2.0)
        assert rep.holds
        assert math.isfinite(rep.constant) and rep.constant > 0

    def test_grid_refinement_stable(self):
        a = check_cianchi_lower(self.phi1, self.phi2, 4.0, 2.0, per_decade=80)
        b = check_cianchi_lower(self.phi1, self.phi2, 4.0, 2.0, per_decade=160)
        assert abs(b.constant - a.constant) <= 0.01 * a.constant

    def test_upper_endpoint_holds(self):
        rep = check_cianchi_upper(self.phi1, self.phi2, 6.0, 2.0)
        assert rep.holds

    def test_upper_checker_requires_r_below_q(self):
        with pytest.raises(ValueError):
            check_cianchi_upper(self.phi1, self.phi2, 6.0, 6.0)

    def test_stepanov_agrees_with_cianchi(self):
        for r in (1.0, 2.0):
            a = check_stepanov_pair(self.phi1, self.phi2, 4.0, r)
            b = check_cianchi_lower(self.phi1, self.phi2, 4.0, r)
            assert a.holds == b.holds


class TestJoint:
    def test_cube_pair_holds_with_unit_constants(self):
        rep = check_theorem_joint(CUBE, CUBE, 2.0, 2.0, 4.0, 4.0)
        assert rep.holds
        lows, ups = rep.parts
        assert abs(lows.constant - 1.0) < 1e-6
        assert abs(ups.constant - 1.0) < 1e-6

    def test_degenerate_square_pair_inner_divergence(self):
        y = power_young(2.0)
        rep = check_theorem_joint(y, y, 2.0, 1.0, 4.0, 1.0)
        assert not rep.holds
        assert rep.mode == "inner-divergence"

    def test_requires_ordered_indices(self):
        with pytest.raises(ValueError):
            check_theorem_joint(CUBE, CUBE, 4.0, 1.0, 2.0, 1.0)

    def test_report_serializable(self):
        rep = check_theorem_joint(CUBE, CUBE, 2.0, 2.0, 4.0, 4.0)
        d = rep.to_dict()
        assert d["holds"] is True
        assert "curve" not in d
        assert isinstance(d["parts"][0], dict)


class TestReportShape:
    def test_defaults(self):
        rep = ConditionReport(name="x", holds=True)
        d = rep.to_dict()
        assert d["name"] == "x" and d["parts"] == []
