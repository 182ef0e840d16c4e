"""Seeded Monte Carlo calibration checks for the estimators.

Each function simulates a DGP where the right answer is known and
returns a rate or an error; tests and the ``montecarlo`` CLI command
both call these.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ardl import ardl_bounds
from .projections import local_projections
from .regression import chow_test, ols, welch_ttest
from .unitroot import adf_test
from .var import var1_fit


@dataclass(frozen=True)
class RateResult:
    name: str
    rate: float
    reps: int
    target: str


def chow_null_rate(reps: int = 2000, n: int = 30, break_index: int = 18, level: float = 0.05,
                   seed: int = 0) -> RateResult:
    """Rejection rate of the break test when both regimes share one DGP."""
    rng = np.random.default_rng(seed)
    hits = 0
    for _ in range(reps):
        x = rng.normal(size=n)
        y = 1.0 + 2.0 * x + rng.normal(size=n)
        hits += chow_test(y, x, break_index).p < level
    return RateResult("chow size", hits / reps, reps, f"{level:.2f}")


def welch_power(reps: int = 1000, n: int = 20, shift: float = 1.0, level: float = 0.05,
                seed: int = 0) -> RateResult:
    """Rejection rate for two normal samples whose means differ by ``shift`` SDs."""
    rng = np.random.default_rng(seed)
    hits = sum(welch_ttest(rng.normal(size=n), rng.normal(shift, 1.0, size=n)).p < level for _ in range(reps))
    return RateResult("welch power", hits / reps, reps, "noncentral t")


def adf_random_walk_rate(reps: int = 500, n: int = 100, level: float = 0.10, seed: int = 0) -> RateResult:
    """Share of pure random walks the unit-root test (wrongly) rejects."""
    rng = np.random.default_rng(seed)
    hits = sum(adf_test(np.cumsum(rng.normal(size=n))).pvalue < level for _ in range(reps))
    return RateResult("adf size (random walk)", hits / reps, reps, f"<= {level:.2f} roughly")


def ardl_null_rate(reps: int = 500, n: int = 60, seed: int = 0) -> RateResult:
    """Share of unrelated random-walk systems where the bounds F clears the 5% upper bound."""
    rng = np.random.default_rng(seed)
    hits = 0
    for _ in range(reps):
        y = np.cumsum(rng.normal(size=n + 1))
        x1 = np.cumsum(rng.normal(size=n + 1))
        x2 = np.cumsum(rng.normal(size=n + 1))
        dy = np.diff(y)
        res = ardl_bounds(dy[1:], [y[1:-1], x1[1:-1], x2[1:-1]], [dy[:-1]])
        hits += res.decision in ("cointegration at 1%", "cointegration at 5%")
    return RateResult("bounds false positive", hits / reps, reps, "small")


def var_recovery_error(n: int = 5000, seed: int = 0) -> float:
    """Largest |estimate - truth| / SE over a known stable VAR(1) coefficient matrix."""
    rng = np.random.default_rng(seed)
    A = np.array([[0.5, 0.1, 0.0], [-0.2, 0.3, 0.1], [0.0, 0.4, 0.2]])
    x = np.zeros((n, 3))
    for t in range(1, n):
        x[t] = A @ x[t - 1] + rng.normal(size=3)
    fit = var1_fit(x)
    return float(np.max(np.abs(fit.coefs - A) / fit.coef_se))


def ols_recovery_error(n: int = 10_000, seed: int = 0) -> float:
    """Largest |estimate - truth| / SE for y = 1.5 - 0.7 x + noise."""
    rng = np.random.default_rng(seed)
    x = rng.normal(size=n)
    y = 1.5 - 0.7 * x + rng.normal(size=n)
    res = ols(y, x)
    return float(np.max(np.abs(res.params - np.array([1.5, -0.7])) / res.bse))


def lp_recovery(n: int = 4000, rho: float = 0.6, H: int = 4, seed: int = 0) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """AR(1) driven by an observed shock: returns (estimates, SEs, true responses).

    The level y_{t-1} does not move with e_t, so the response of
    y_{t+h} - y_{t-1} is rho**h.
    """
    rng = np.random.default_rng(seed)
    e = rng.normal(size=n)
    y = np.zeros(n)
    for t in range(1, n):
        y[t] = rho * y[t - 1] + e[t] + 0.5 * rng.normal()
    proj = local_projections(y, {"shock": e}, {}, H=H, base_lag=1)
    true = rho ** np.arange(H + 1)
    return proj.path("shock"), proj.se_path("shock"), true


def run_all(seed: int = 0, reps: int = 2000) -> list[RateResult]:
    return [
        chow_null_rate(reps=reps, seed=seed),
        welch_power(reps=min(reps, 1000), seed=seed),
        adf_random_walk_rate(reps=min(reps, 500), seed=seed),
        ardl_null_rate(reps=min(reps, 500), seed=seed),
    ]
