import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from debtlab.core_model import BASELINE, Calibration, exact_debt_step, exact_step_error
from debtlab.corridor import (
    Frontier,
    OperatingPoint,
    baseline_frontier,
    baseline_point,
    classify,
    corridor_layers,
    corridor_width,
    debt_change,
    epsilon_star,
    epsilon_star_exact,
    error_band_halfwidth,
    frontier,
    g_star_min,
    limiting_case_condition,
    read_corridor,
)

calibrations = st.builds(
    Calibration,
    b0=st.floats(0.2, 4.0),
    r_n=st.floats(-0.02, 0.08),
    pi=st.floats(-0.02, 0.08),
    g_n_star=st.floats(-0.03, 0.10),
    d=st.floats(-0.03, 0.08),
    s=st.floats(0.0, 0.02),
)


class TestFrontier:
    def test_baseline_intercept(self):
        assert frontier(0.027, 0.020, 0.0, 2.40).intercept == pytest.approx(0.035333, abs=5e-7)

    def test_post_peak_debt(self):
        assert frontier(0.027, 0.020, 0.0, 2.64).intercept == pytest.approx(0.034576, abs=5e-7)

    def test_balanced_budget_pins_intercept_at_inflation(self):
        assert frontier(0.021, 0.01, 0.01, 1.3).intercept == 0.021

    def test_rejects_nonpositive_debt(self):
        with pytest.raises(ValueError):
            frontier(0.02, 0.02, 0.0, 0.0)

    def test_slope_is_fixed(self):
        with pytest.raises(ValueError):
            Frontier(0.03, slope=-2.0)

    @given(b1=st.floats(0.1, 5.0), b2=st.floats(0.1, 5.0), d=st.floats(0.001, 0.1))
    def test_intercept_falls_with_debt_when_deficit_positive(self, b1, b2, d):
        assume(b2 - b1 > 1e-9)
        assert frontier(0.02, d, 0.0, b1).intercept > frontier(0.02, d, 0.0, b2).intercept


class TestWidth:
    def test_baseline_width(self):
        w = corridor_width(OperatingPoint(0.005, 0.030), baseline_frontier(BASELINE))
        assert w == pytest.approx(-0.000236, abs=5e-7)

    def test_higher_bias(self):
        w = corridor_width(OperatingPoint(0.0075, 0.030), baseline_frontier(BASELINE))
        assert w == pytest.approx(0.00153, abs=5e-6)

    def test_point_on_frontier(self):
        f = Frontier(0.035)
        assert corridor_width(OperatingPoint(0.01, 0.025), f) == 0.0

    @given(c=calibrations)
    def test_sign_opposite_to_debt_change(self, c):
        db = debt_change(c)
        w = corridor_width(baseline_point(c), baseline_frontier(c))
        assert db == pytest.approx(-math.sqrt(2) * w * c.b0, abs=1e-12)
        assume(abs(db) > 1e-12)
        assert (db > 0) == (w < 0)

    @given(c=calibrations, pi2=st.floats(-0.02, 0.08))
    def test_depends_on_inflation_only_through_rate(self, c, pi2):
        moved = c.with_(pi=pi2)
        p1 = OperatingPoint(c.pi - c.r_n, c.g_n_star)
        p2 = OperatingPoint(pi2 - c.r_n, c.g_n_star)
        w1 = corridor_width(p1, baseline_frontier(c))
        w2 = corridor_width(p2, baseline_frontier(moved))
        assert w1 == pytest.approx(w2, abs=1e-14)


class TestBoundaries:
    def test_epsilon_star(self):
        assert epsilon_star(0.027, 0.020, 0.0, 2.40, 0.030) == pytest.approx(0.005333, abs=5e-7)

    def test_epsilon_star_at_lower_growth(self):
        assert epsilon_star(0.027, 0.020, 0.0, 2.40, 0.025) == pytest.approx(0.010333, abs=5e-7)

    def test_growth_at_intercept_needs_no_bias(self):
        f = frontier(0.027, 0.020, 0.0, 2.40)
        assert epsilon_star(0.027, 0.020, 0.0, 2.40, f.intercept) == pytest.approx(0.0, abs=1e-16)

    def test_g_star_min(self):
        assert g_star_min(0.027, 0.020, 0.0, 2.40, 0.005) == pytest.approx(0.030333, abs=5e-7)
        assert g_star_min(0.027, 0.020, 0.0, 2.64, 0.005) == pytest.approx(0.029576, abs=5e-7)

    @given(c=calibrations)
    def test_boundaries_share_the_intercept(self, c):
        f = baseline_frontier(c)
        e_star = epsilon_star(c.pi, c.d, c.s, c.b0, c.g_n_star)
        g_min = g_star_min(c.pi, c.d, c.s, c.b0, c.eps)
        assert e_star + c.g_n_star == pytest.approx(f.intercept, abs=1e-14)
        assert g_min + c.eps == pytest.approx(f.intercept, abs=1e-14)


class TestBand:
    def test_baseline_halfwidth(self):
        band = error_band_halfwidth(exact_step_error(0.022, 0.030, 2.40))
        assert round(100 * band, 3) == 0.040

    def test_zero(self):
        assert error_band_halfwidth(0.0) == 0.0

    def test_aggressive(self):
        err = exact_step_error(0.037, 0.005, 2.40)
        assert error_band_halfwidth(err) == pytest.approx(abs(err) / math.sqrt(2))


class TestReading:
    def test_baseline_within_band(self):
        r = read_corridor(BASELINE)
        assert r.verdict == "within error band"
        assert r.width == pytest.approx(-0.000236, abs=5e-7)

    def test_inside(self):
        r = read_corridor(BASELINE, OperatingPoint(0.0075, 0.030))
        assert r.verdict == "inside corridor"

    def test_on_boundary(self):
        f = baseline_frontier(BASELINE)
        r = read_corridor(BASELINE, OperatingPoint(0.01, f.intercept - 0.01))
        assert r.verdict == "on boundary"

    def test_classify(self):
        assert classify(-0.01, 0.001) == "outside corridor"
        assert classify(0.0) == "on boundary"


class TestLimitingCase:
    def test_growth_above_rate_is_necessary_not_sufficient(self):
        # r < g with a primary deficit still lets debt rise when g - r < d/b
        c = BASELINE.with_(r_n=0.02, pi=0.02, g_n_star=0.025)
        lhs, rhs, reduces = limiting_case_condition(c)
        assert reduces and lhs < 0 and lhs > rhs
        c = BASELINE.with_(r_n=0.02, pi=0.02, g_n_star=0.03)
        assert limiting_case_condition(c).lhs <= limiting_case_condition(c).rhs

    @given(c=calibrations)
    def test_stable_with_deficit_implies_growth_above_rate(self, c):
        assume(c.d - c.s > 0)
        lhs, rhs, _ = limiting_case_condition(c)
        if lhs <= rhs:
            assert c.r_n < c.g_n_star

    def test_boundary(self):
        c = BASELINE.with_(d=0.0, r_n=0.03, g_n_star=0.03)
        lhs, rhs, reduces = limiting_case_condition(c)
        assert lhs == rhs == 0.0 and reduces

    @given(c=calibrations)
    def test_reduces_for_any_calibration(self, c):
        assert limiting_case_condition(c).reduces


def test_layers_shape():
    layers = corridor_layers(BASELINE, extra_b=[2.64])
    assert [ln["style"] for ln in layers["lines"]] == ["solid", "dashed"]
    assert len(layers["polygons"]) == 1
    assert layers["points"][0]["xy"] == pytest.approx((0.5, 3.0))


class TestExactFactorBias:
    def test_baseline(self):
        # r = (1+g)(1-d/b) - 1 keeps debt flat; 1.03 * (1 - 0.02/2.4) - 1 = 0.0214167
        assert epsilon_star_exact(0.027, 0.020, 0.0, 2.40, 0.030) == pytest.approx(0.027 - 0.0214166667, abs=1e-9)

    @given(g=st.floats(-0.05, 0.1), b=st.floats(0.2, 4.0), d=st.floats(-0.05, 0.08))
    def test_holds_debt_flat(self, g, b, d):
        eps = epsilon_star_exact(0.027, d, 0.0, b, g)
        assert exact_debt_step(b, 0.027 - eps, g, d) == pytest.approx(b, abs=1e-12)
