import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from debtlab.core_model import (
    BASELINE,
    Calibration,
    MacroState,
    debt_step,
    effective_rate,
    exact_debt_step,
    exact_step_error,
    from_percent_units,
    ioer_adjusted_deficit,
    linear_hinge_premium,
    nominal_growth,
    passthrough_inflation,
    premium_sign_violations,
    repression_bias,
    stability_check,
    zero_premium,
)

rates = st.floats(-0.05, 0.10, allow_nan=False)
debts = st.floats(0.1, 4.0, allow_nan=False)


def test_baseline_calibration_values():
    c = BASELINE
    assert (c.b0, c.r_n, c.pi, c.g_n_star) == (2.40, 0.022, 0.027, 0.030)
    assert (c.alpha, c.d, c.s, c.phi) == (0.0005, 0.020, 0.0, 0.90)
    assert (c.reserves, c.tbills, c.gdp) == (500, 120, 670)


def test_percent_unit_conversion():
    vals = from_percent_units(r_n=2.2, alpha=0.050, beta=0.005, gamma=-0.020, b0=240, e_bar=10)
    assert vals == {"r_n": 0.022, "alpha": 0.0005, "beta": 0.00005, "gamma": -0.0002, "b0": 2.4, "e_bar": 10}


def test_invalid_calibration_lists_every_problem():
    with pytest.raises(ValueError, match="b0 > 0.*0 <= phi <= 1"):
        Calibration(b0=-1.0, phi=1.5)


@pytest.mark.parametrize(
    "pi, r_n, expected",
    [(0.027, 0.022, 0.005), (0.015, 0.022, -0.007), (0.03, 0.03, 0.0)],
)
def test_repression_bias(pi, r_n, expected):
    assert repression_bias(pi, r_n) == pytest.approx(expected, abs=1e-15)


def test_state_bias_is_derived():
    s = MacroState(2026, 2.4, 0.022, 0.027, 0.03)
    assert s.eps == pytest.approx(0.005)


class TestNominalGrowth:
    def test_flat_exchange_rate(self):
        assert nominal_growth(0.030, 0.0005, 0.123, 7.0, 0.0) == 0.030

    def test_appreciation(self):
        assert nominal_growth(0.030, 0.0005, 0.00005, 25.0, -20.0) == pytest.approx(0.020)

    def test_penalty_above_threshold(self):
        # 0.030 + 0.0005*20 - 0.00005*(20-5)^2
        assert nominal_growth(0.030, 0.0005, 0.00005, 5.0, 20.0) == pytest.approx(0.02875)

    def test_rejects_nonpositive_threshold(self):
        with pytest.raises(ValueError):
            nominal_growth(0.03, 0.0005, 0.0, 0.0, 1.0)

    @given(de=st.floats(-80, 10), b1=st.floats(0, 0.01), b2=st.floats(0, 0.01))
    def test_penalty_inactive_below_threshold(self, de, b1, b2):
        g1 = nominal_growth(0.03, 0.0005, b1, 10.0, de)
        g2 = nominal_growth(0.03, 0.0005, b2, 30.0, de)
        assert g1 == g2 == 0.03 + 0.0005 * de


class TestDebtStep:
    def test_status_quo_first_year(self):
        assert debt_step(2.40, 0.022, 0.030, 0.020) == pytest.approx(2.4008, abs=1e-12)

    def test_aggressive_first_year(self):
        assert debt_step(2.40, 0.037, 0.005, 0.0339) == pytest.approx(2.5107, abs=1e-12)

    def test_fixed_point(self):
        assert debt_step(1.7, 0.02, 0.02, 0.01, 0.01) == 1.7

    @given(b=debts, r=rates, g=rates, d=rates, s=st.floats(0, 0.02))
    def test_step_identity(self, b, r, g, d, s):
        lhs = debt_step(b, r, g, d, s) - b
        assert lhs == pytest.approx((r - g) * b + d - s, abs=1e-14)

    @given(b=debts, r=rates, g=rates, pi=rates)
    def test_decomposition_identity(self, b, r, g, pi):
        eps = repression_bias(pi, r)
        assert (pi - g) * b - eps * b == pytest.approx((r - g) * b, abs=1e-14)


class TestExactStepError:
    def test_baseline_linearization_gap(self):
        assert exact_step_error(0.022, 0.030, 2.40) == pytest.approx(-0.000559, abs=5e-7)

    def test_aggressive(self):
        assert exact_step_error(0.037, 0.005, 2.40) == pytest.approx(2.40 * 0.005 * 0.032 / 1.005, rel=1e-12)

    def test_zero_when_rate_equals_growth(self):
        assert exact_step_error(0.03, 0.03, 2.4) == 0.0

    @given(b=debts, r=rates, g=st.floats(-0.05, 0.10), d=rates)
    def test_matches_linear_minus_exact(self, b, r, g, d):
        diff = debt_step(b, r, g, d) - exact_debt_step(b, r, g, d)
        assert exact_step_error(r, g, b) == pytest.approx(diff, abs=1e-13)


class TestIoerDeficit:
    @pytest.mark.parametrize("hike, share, expected", [(0.005, 1.0, 0.0246), (0.015, 1.0, 0.0339), (0.015, 0.5, 0.0269)])
    def test_published_deficits(self, hike, share, expected):
        assert round(ioer_adjusted_deficit(0.020, hike, share, 500, 120, 670), 4) == expected

    def test_zero_pass_through(self):
        assert ioer_adjusted_deficit(0.020, 0.04, 0.0, 500, 120, 670) == 0.020

    def test_share_out_of_range(self):
        with pytest.raises(ValueError):
            ioer_adjusted_deficit(0.02, 0.01, 1.2, 500, 120, 670)

    @given(a1=st.floats(0, 1), a2=st.floats(0, 1), h=st.floats(0, 0.05))
    def test_affine_in_share(self, a1, a2, h):
        f = lambda a: ioer_adjusted_deficit(0.02, h, a, 500, 120, 670)
        mid = f((a1 + a2) / 2)
        assert mid == pytest.approx((f(a1) + f(a2)) / 2, abs=1e-15)


class TestPassThrough:
    def test_after_one_year(self):
        assert passthrough_inflation(0.027, -0.0002, -20) == pytest.approx(0.031)

    def test_no_depreciation(self):
        assert passthrough_inflation(0.027, -0.0002, 0.0) == 0.027

    def test_after_four_years(self):
        assert passthrough_inflation(0.027, -0.0002, -80) == pytest.approx(0.043)


class TestStability:
    def test_baseline_marginally_unstable(self):
        lhs, rhs, stable = stability_check(BASELINE)
        assert lhs == pytest.approx(-0.008)
        assert rhs == pytest.approx(-0.008333, abs=5e-7)
        assert not stable

    def test_higher_bias_is_stable(self):
        assert stability_check(BASELINE.with_(r_n=0.0195)).stable

    def test_balanced_budget(self):
        c = BASELINE.with_(d=0.0, r_n=0.029)
        res = stability_check(c)
        assert res.rhs == 0.0 and res.stable

    @given(b=debts, r=rates, g=rates, d=rates)
    def test_sign_law(self, b, r, g, d):
        # skip points within rounding distance of the boundary
        assume(abs((r - g) * b + d) > 1e-12)
        c = Calibration(b0=b, r_n=r, g_n_star=g, d=d)
        grows = debt_step(b, r, g, d) > b
        assert stability_check(c).stable is (not grows)


class TestPremium:
    def test_default_hook(self):
        assert zero_premium(0.9, 2.4) == 0.0
        assert effective_rate(0.022) == 0.022
        assert effective_rate(0.022, 0.005) == pytest.approx(0.027)

    def test_negative_premium_rejected(self):
        with pytest.raises(ValueError):
            effective_rate(0.022, -0.001)

    def test_hinge_satisfies_sign_restrictions(self):
        assert premium_sign_violations(linear_hinge_premium(0.01)) == []
        assert premium_sign_violations(zero_premium) == []

    def test_wrong_signed_hook_is_caught(self):
        bad = premium_sign_violations(lambda phi, b: 0.01 * phi / b)
        kinds = {k for _, _, k in bad}
        assert kinds == {"phi", "b"}

    def test_hinge_value(self):
        assert linear_hinge_premium(0.02)(0.75, 2.0) == pytest.approx(0.02 * 0.10 * 2.0)
        assert math.isclose(linear_hinge_premium(0.02)(0.95, 2.0), 0.0)
