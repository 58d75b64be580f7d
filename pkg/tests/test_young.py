import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from orliczkit.young import (
    ExpYoungFunction,
    YoungFunction,
    complementary,
    load_young,
    power_young,
)

E = math.e


def powerlog_pair():
    y1 = load_young({"pieces": [{"upto": E, "c": 1, "p": 5, "alpha": 0},
                                {"from": E, "c": 1, "p": 4, "alpha": 0}]})
    y2 = load_young({"pieces": [{"upto": E, "c": 1, "p": 5, "alpha": 0},
                                {"from": E, "c": 1, "p": 4, "alpha": 2}]})
    return y1, y2


class TestPowerYoung:
    def test_values(self):
        y = power_young(3.0)
        assert y(0.0) == 0.0
        assert y(2.0) == 8.0
        assert y.phi(2.0) == 12.0

    def test_scaled(self):
        y = power_young(2.0, c=5.0)
        assert y(3.0) == 45.0

    def test_leading(self):
        y = power_young(3.0)
        assert y.leading("zero") == (1.0, 3.0, 0.0)
        assert y.leading("inf") == (1.0, 3.0, 0.0)


class TestPiecewise:
    def test_continuity_rescale(self):
        _, y2 = powerlog_pair()
        # below the breakpoint: pure power
        assert abs(y2(E) - E**5) < 1e-9 * E**5
        # above: c rescaled to e for continuity, Phi(t) = e t^4 (log t)^2
        assert abs(y2(E**2) - E * E**8 * 4.0) < 1e-6 * E**9

    def test_density_left_continuous_pieces(self):
        _, y2 = powerlog_pair()
        # density on the first piece: 5 t^4
        assert abs(y2.phi(1e-12) - 5e-48) < 1e-60
        # density on the second piece at t=e^2: e t^3 (log t)(p log t + alpha)
        t = E**2
        expect = E * t**3 * 2.0 * (4.0 * 2.0 + 2.0)
        assert abs(y2.phi(t) - expect) < 1e-9 * expect

    def test_monotone_convex(self):
        _, y2 = powerlog_pair()
        ts = np.geomspace(1e-6, 1e6, 200)
        vals = np.array([y2(t) for t in ts])
        assert np.all(np.diff(vals) > 0)
        phis = np.array([y2.phi(t) for t in ts])
        assert np.all(np.diff(phis) >= -1e-12 * phis[:-1])

    def test_validation_errors(self):
        with pytest.raises(ValueError):
            YoungFunction([])
        with pytest.raises(ValueError):
            YoungFunction([(1.0, 1.0, 2.0, 0.0)])  # must start at 0
        with pytest.raises(ValueError):
            YoungFunction([(0.0, 1.0, -2.0, 0.0)])  # p > 0
        with pytest.raises(ValueError):
            # alpha < 0 needs the piece to start above 1
            YoungFunction([(0.0, 1.0, 2.0, -1.0)])


class TestLoader:
    def test_dict_str_roundtrip(self):
        spec = {"pieces": [{"c": 1, "p": 3}]}
        assert load_young(spec)(2.0) == 8.0
        assert load_young(json.dumps(spec))(2.0) == 8.0

    def test_file(self, tmp_path):
        path = tmp_path / "y.json"
        path.write_text(json.dumps({"pieces": [{"c": 2, "p": 2, "alpha": 0}]}))
        assert load_young(str(path))(3.0) == 18.0

    def test_chaining_validated(self):
        with pytest.raises(ValueError):
            load_young({"pieces": [{"upto": 2, "c": 1, "p": 3},
                                   {"from": 5, "c": 1, "p": 2}]})


class TestComplementary:
    def test_pure_power_exact(self):
        # conjugate of t^p has Psi(1) = (p-1)/p * p^(-1/(p-1))
        c = complementary(power_young(3.0))
        assert abs(c(1.0) - (2.0 / 3.0) * 3.0 ** (-0.5)) < 1e-12

    def test_square_spot(self):
        # Phi = t^2 -> Psi = t^2/4; Young's inequality at s=2, t=3
        c = complementary(power_young(2.0))
        assert abs(c(3.0) - 9.0 / 4.0) < 1e-12
        assert 6.0 <= power_young(2.0)(2.0) + c(3.0)

    def test_youngs_inequality_tabulated(self):
        _, y2 = powerlog_pair()
        c = complementary(y2)
        for s in np.geomspace(1e-3, 1e3, 25):
            for t in np.geomspace(1e-3, 1e3, 25):
                assert s * t <= (y2(s) + c(t)) * (1.0 + 1e-9)


class TestExp:
    def test_values(self):
        y = ExpYoungFunction()
        assert abs(y(1.0) - (E - 2.0)) < 1e-12
        assert y(0.0) == 0.0
        assert math.isinf(y.leading("inf")[1])

    def test_complementary_is_log_type(self):
        y = ExpYoungFunction()
        c = y.complementary()
        t = 2.0
        assert abs(c(t) - ((1 + t) * math.log(1 + t) - t)) < 1e-12
        for s in np.geomspace(0.01, 100.0, 40):
            for t in np.geomspace(0.01, 100.0, 40):
                assert s * t <= y(s) + c(t) + 1e-9


@settings(max_examples=200, deadline=None)
@given(st.floats(min_value=1e-3, max_value=1e3))
def test_convexity_bracket(t):
    # Phi(t) <= t phi(t) <= Phi(2t)
    _, y2 = powerlog_pair()
    assert y2(t) <= t * y2.phi(t) * (1 + 1e-9)
    assert t * y2.phi(t) <= y2(2 * t) * (1 + 1e-9)
