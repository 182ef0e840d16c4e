"""Bounds test for a levels relationship in an error-correction regression."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .regression import RegressionResult, f_test_zero, ols

# Pesaran, Shin & Smith (2001), Table CI(iii): unrestricted intercept,
# no trend, k = 2 long-run forcing variables. (lower I(0), upper I(1))
BOUNDS_CASE3_K2 = {
    0.10: (3.17, 4.14),
    0.05: (3.79, 4.85),
    0.01: (5.15, 6.36),
}


@dataclass(frozen=True)
class LongRun:
    name: str
    value: float
    se: float
    identified: bool


@dataclass(frozen=True)
class BoundsResult:
    ecm: RegressionResult
    F: float
    df: tuple[int, int]
    decision: str
    long_run: tuple[LongRun, ...]

    def __iter__(self):
        return iter((self.ecm, self.F, self.decision))


def bounds_decision(F: float, bounds: dict = BOUNDS_CASE3_K2) -> str:
    """Compare F with the I(0)/I(1) bounds, strictest level first."""
    for level in sorted(bounds):
        lo, hi = bounds[level]
        if F > hi:
            return f"cointegration at {int(level * 100)}%"
    lo10, hi10 = bounds[max(bounds)]
    if F < lo10:
        return "no cointegration"
    return "inconclusive"


def ardl_bounds(
    y,
    levels: Sequence,
    short_run: Sequence = (),
    level_names: Sequence[str] | None = None,
    short_names: Sequence[str] | None = None,
    bounds: dict = BOUNDS_CASE3_K2,
) -> BoundsResult:
    """Estimate dy_t = c + a*y_{t-1} + sum b_j x_{j,t-1} + short-run terms.

    Parameters
    ----------
    y : array_like
        Dependent variable in differences (dy_t), aligned with the rows.
    levels : sequence of arrays
        First entry is the lagged level of the dependent variable (y_{t-1});
        the rest are lagged levels of the forcing variables.
    short_run : sequence of arrays
        Additional stationary regressors such as dy_{t-1}.

    The bounds F is the classical F on all level coefficients. Long-run
    multipliers -b_j/a use delta-method errors and are flagged as not
    identified unless the F exceeds the 10% upper bound.
    """
    levels = [np.asarray(v, dtype=float) for v in levels]
    short_run = [np.asarray(v, dtype=float) for v in short_run]
    if len(levels) < 2:
        raise ValueError("need the lagged dependent level and at least one forcing level")
    level_names = list(level_names or ["y_lag"] + [f"x{j}_lag" for j in range(1, len(levels))])
    short_names = list(short_names or [f"s{j}" for j in range(1, len(short_run) + 1)])
    X = np.column_stack(levels + short_run)
    res = ols(y, X, names=level_names + short_names)
    F, _, df = f_test_zero(res, level_names)
    decision = bounds_decision(F, bounds)
    identified = decision.startswith("cointegration")

    a_idx = res.index(level_names[0])
    a = res.params[a_idx]
    long_run = []
    for name in level_names[1:]:
        j = res.index(name)
        b = res.params[j]
        value = -b / a
        # gradient of -b/a with respect to (a, b)
        grad = np.array([b / a**2, -1.0 / a])
        sub = res.cov[np.ix_([a_idx, j], [a_idx, j])]
        se = float(np.sqrt(grad @ sub @ grad))
        long_run.append(LongRun(name, float(value), se, identified))
    return BoundsResult(res, float(F), df, decision, tuple(long_run))
