import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from debtlab import presets
from debtlab.core_model import BASELINE, debt_step, ioer_adjusted_deficit, nominal_growth
from debtlab.scenarios import (
    ExogenousInflation,
    FixedDeficit,
    IoerDeficit,
    PassThrough,
    Perturbation,
    ScenarioSpec,
    beta_critical,
    fan_chart,
    gap_half_life,
    ioer_sweep,
    long_run_path,
    ratchet_experiment,
    run_scenario,
    steady_state_debt,
    year_one_accumulation,
)


def pct_path(name):
    return [round(100 * b, 1) for b in run_scenario(presets.get_scenario(name), BASELINE).b]


def hand_rolled(b0, r, g, d, years):
    """Independent loop over the recursion with constant inputs."""
    out = [b0]
    for _ in range(years):
        out.append(out[-1] + (r - g) * out[-1] + d)
    return out


class TestNamedScenarios:
    def test_status_quo_path(self):
        assert pct_path("A") == [240.0, 240.1, 240.2, 240.2, 240.3]

    @pytest.mark.parametrize(
        "name, final",
        [("B", 251.9), ("C", 286.4), ("C-ALT", 270.7), ("STRESS", 286.9)],
    )
    def test_published_final_year(self, name, final):
        assert pct_path(name)[-1] == pytest.approx(final, abs=0.05)

    def test_moderate_matches_independent_loop(self):
        # the engine and a plain loop agree; the published path does not (see ledger)
        d = ioer_adjusted_deficit(0.02, 0.005, 1.0, 500, 120, 670)
        ref = hand_rolled(2.40, 0.027, 0.025, d, 4)
        np.testing.assert_allclose(run_scenario(presets.MODERATE, BASELINE).b, ref, rtol=0, atol=1e-14)

    def test_pass_through_inflation_path(self):
        traj = run_scenario(presets.AGGRESSIVE_ALT, BASELINE)
        assert [round(100 * s.pi, 2) for s in traj.states] == [2.7, 3.1, 3.5, 3.9, 4.3]
        assert [round(100 * s.eps, 2) for s in traj.states][-1] == pytest.approx(0.6)

    def test_stress_inflation_is_imposed(self):
        traj = run_scenario(presets.STRESS, BASELINE)
        assert [s.pi for s in traj.states] == [0.027, 0.015, 0.010, 0.005, 0.0]

    def test_moderate_plus_first_year(self):
        acc = year_one_accumulation(presets.MODERATE_PLUS, BASELINE)
        d = run_scenario(presets.MODERATE_PLUS, BASELINE).states[1].d
        assert round(100 * d, 2) == 2.93
        assert round(100 * acc, 2) == 8.21

    def test_unknown_name(self):
        with pytest.raises(KeyError, match="known: A, B"):
            presets.get_scenario("Z")

    def test_short_schedule_rejected(self):
        with pytest.raises(ValueError, match="needs 4"):
            ScenarioSpec("x", rate_hike=(0.01, 0.01))

    def test_schedule_entries_used_per_year(self):
        spec = ScenarioSpec("x", rate_hike=(0.0, 0.01, 0.0, 0.0))
        traj = run_scenario(spec, BASELINE)
        assert [s.r_n for s in traj.states] == [0.022, 0.022, 0.032, 0.022, 0.022]

    def test_trajectory_accessors(self):
        traj = run_scenario(presets.STATUS_QUO, BASELINE)
        assert traj.years == [2026, 2027, 2028, 2029, 2030]
        assert traj.b_at(2030) == traj.final.b

    @settings(max_examples=50)
    @given(hike=st.floats(0, 0.03), de=st.floats(-60, 30), share=st.floats(0, 1))
    def test_engine_equals_manual_recursion(self, hike, de, share):
        spec = ScenarioSpec("x", rate_hike=hike, delta_e_path=de, deficit_mode=IoerDeficit(share))
        c = BASELINE
        g = nominal_growth(c.g_n_star, c.alpha, c.beta, c.e_bar, de)
        d = ioer_adjusted_deficit(c.d, hike, share, c.reserves, c.tbills, c.gdp)
        b = c.b0
        for _ in range(4):
            b = debt_step(b, c.r_n + hike, g, d)
        assert run_scenario(spec, c).final.b == b


class TestRatchet:
    def test_two_year_shock_levels(self):
        r = presets.ratchet(2)
        assert round(100 * r.baseline.b_at(2028), 1) == 240.2
        assert round(100 * r.shocked.b_at(2028), 1) == pytest.approx(246.0, abs=0.05)

    @pytest.mark.parametrize("n, gap", [(2, 5.4), (5, 13.9)])
    def test_gap_in_2035(self, n, gap):
        assert 100 * presets.ratchet(n).gap_at(2035) == pytest.approx(gap, abs=0.1)

    def test_zero_length_shock(self):
        r = presets.ratchet(0)
        assert np.all(r.gap == 0.0)

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
    def test_post_reversion_decay(self, n):
        r = presets.ratchet(n)
        tail = r.gap[n:]
        ratios = tail[1:] / tail[:-1]
        assert np.max(np.abs(ratios - r.decay_factor)) < 1e-12

    def test_bad_length(self):
        with pytest.raises(ValueError):
            ratchet_experiment(BASELINE, presets.RATCHET_SHOCK, 14, 14)


class TestLongRun:
    @pytest.mark.parametrize("rg, years", [(-0.008, 86.3), (-0.5, 1.0)])
    def test_half_life(self, rg, years):
        assert gap_half_life(rg) == pytest.approx(years, abs=0.05)

    def test_half_life_without_decay(self):
        assert gap_half_life(0.0) == math.inf

    def test_steady_state(self):
        assert steady_state_debt(0.020, 0.008) == pytest.approx(2.50)
        assert steady_state_debt(0.0, 0.01) == 0.0
        with pytest.raises(ValueError):
            steady_state_debt(0.02, 0.0)

    def test_monotone_approach(self):
        path = long_run_path(BASELINE, 125)
        assert np.all(np.diff(path) > 0)
        assert path[-1] < 2.50
        assert path[-1] > 2.46

    def test_distance_halves_every_half_life(self):
        hl = gap_half_life(BASELINE.r_n - BASELINE.g_n_star)
        path = long_run_path(BASELINE, 2000)
        dist = 2.50 - path
        for k in (1, 5, 10):
            t = k * hl
            lo = int(math.floor(t))
            # interpolate the geometric decay at a fractional year
            frac = dist[lo] * (dist[lo + 1] / dist[lo]) ** (t - lo)
            assert frac / dist[0] == pytest.approx(0.5**k, rel=1e-9)

    def test_attractor_reached_to_1e9(self):
        # an initial distance of 0.1 needs log2(1e8), about 27 half-lives, to fall below 1e-9
        hl = gap_half_life(BASELINE.r_n - BASELINE.g_n_star)
        path = long_run_path(BASELINE, int(30 * hl))
        assert abs(path[-1] - 2.50) < 1e-9
        assert abs(path[int(10 * hl)] - 2.50) > 1e-5


class TestSweep:
    rows = ioer_sweep(BASELINE, presets.SWEEP_BASE, presets.SWEEP_ALPHAS)

    def test_endpoints(self):
        first, last = self.rows[0], self.rows[-1]
        assert round(100 * first.d, 2) == 2.00
        assert round(100 * last.d, 2) == 3.39
        assert 100 * last.b_final == pytest.approx(270.6, abs=0.05)
        assert 100 * last.gap_vs_baseline == pytest.approx(30.3, abs=0.05)
        assert 100 * first.gap_vs_baseline == pytest.approx(24.6, abs=0.05)

    def test_zero_share_final_year(self):
        assert 100 * self.rows[0].b_final == pytest.approx(265.0, abs=0.05)

    def test_spread(self):
        spread = self.rows[-1].b_final - self.rows[0].b_final
        assert round(100 * spread, 1) == 5.7

    def test_trap_everywhere(self):
        assert all(r.trap for r in self.rows)
        assert all(r.b_final > BASELINE.b0 for r in self.rows)

    def test_strictly_increasing_and_affine(self):
        b = np.array([r.b_final for r in self.rows])
        assert np.all(np.diff(b) > 0)
        np.testing.assert_allclose(np.diff(b, 2), 0.0, atol=1e-12)

    def test_tighter_denominator_is_respected(self):
        spec = presets.SWEEP_BASE.with_(deficit_mode=IoerDeficit(1.0, 600.0))
        row = ioer_sweep(BASELINE, spec, [1.0])[0]
        assert row.d == pytest.approx(0.02 + 0.015 * 620 / 600)


class TestFan:
    rows = fan_chart(BASELINE, presets.fan_perturbations())

    def test_status_quo_bias_row(self):
        assert [round(100 * b, 1) for b in self.rows[0].b_final] == [242.7, 240.3, 238.0]

    def test_low_elasticity(self):
        assert round(100 * self.rows[4].b_final[2], 1) == 263.1

    def test_degenerate_perturbation(self):
        p = Perturbation(presets.STATUS_QUO, "g_n_star", (0.03, 0.03, 0.03))
        (row,) = fan_chart(BASELINE, [p])
        assert row.b_final[0] == row.b_final[1] == row.b_final[2]
        assert row.range == 0.0


class TestBetaCritical:
    @pytest.mark.parametrize("e_bar, beta", [(5.0, 0.0043), (10.0, 0.0097), (15.0, 0.0387)])
    def test_published_values(self, e_bar, beta):
        g_min = 0.022 + 0.020 / 2.40
        # beta in %/yen^2 for comparison with quoted values
        assert 100 * beta_critical(0.040, g_min, 20.0, e_bar) == pytest.approx(beta, abs=1e-4)

    def test_inactive_penalty(self):
        assert beta_critical(0.04, 0.03, 10.0, 10.0) is None


def test_deficit_and_inflation_modes_revert():
    spec = ScenarioSpec(
        "x",
        horizon=4,
        rate_hike=0.01,
        delta_e_path=-10.0,
        pi_mode=ExogenousInflation((0.01, 0.01)),
        deficit_mode=FixedDeficit(0.05),
        revert_after=2,
    )
    traj = run_scenario(spec, BASELINE)
    last = traj.final
    assert (last.r_n, last.pi, last.d, last.delta_e) == (0.022, 0.027, 0.020, 0.0)


def test_pass_through_gamma_override():
    spec = presets.AGGRESSIVE_ALT.with_(pi_mode=PassThrough(-0.0005))
    assert run_scenario(spec, BASELINE).states[1].pi == pytest.approx(0.027 + 0.01)
