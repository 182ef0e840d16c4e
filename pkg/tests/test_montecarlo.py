"""Size, power and recovery of the estimators on simulated data with known truth."""

import numpy as np
import pytest
from scipy import stats

from debtlab.econometrics import montecarlo as mc

pytestmark = pytest.mark.slow


def test_chow_size_at_2000_reps():
    res = mc.chow_null_rate(reps=2000, seed=1)
    assert abs(res.rate - 0.05) <= 0.02


def test_welch_power_matches_noncentral_t():
    res = mc.welch_power(reps=1000, n=20, shift=1.0, seed=1)
    # equal variances and sizes: df = 38, noncentrality = shift * sqrt(n/2)
    crit = stats.t.ppf(0.975, 38)
    power = stats.nct.sf(crit, 38, np.sqrt(10)) + stats.nct.cdf(-crit, 38, np.sqrt(10))
    assert abs(res.rate - power) < 3 * np.sqrt(power * (1 - power) / 1000) + 0.01


def test_adf_rarely_rejects_random_walk():
    res = mc.adf_random_walk_rate(reps=500, level=0.10, seed=1)
    assert res.rate <= 0.10 + 3 * np.sqrt(0.09 / 500)


def test_bounds_test_rarely_finds_spurious_cointegration():
    res = mc.ardl_null_rate(reps=500, seed=1)
    assert res.rate < 0.10


def test_var_recovers_coefficients_within_3se():
    assert mc.var_recovery_error(seed=1) < 3.0


def test_ols_recovers_coefficients_within_3se():
    # one draw of two coefficients exceeds 3 SE about 0.5% of the time, so count over seeds
    errs = np.array([mc.ols_recovery_error(seed=s) for s in range(100)])
    assert np.mean(errs < 3.0) >= 0.97
    assert np.median(errs) < 1.5


def test_lp_recovers_geometric_response():
    est, se, true = mc.lp_recovery(seed=1)
    assert np.all(np.abs(est - true) / se < 3.0)


def test_seeded_runs_repeat():
    a = mc.chow_null_rate(reps=200, seed=7)
    b = mc.chow_null_rate(reps=200, seed=7)
    assert a == b
