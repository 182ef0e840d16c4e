"""Augmented Dickey-Fuller test with a constant."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import stats

from .regression import ols

# MacKinnon (1994) "Approximate asymptotic distribution functions for
# unit-root and cointegration tests", J. Business & Economic Statistics
# 12(2), Table 3 response-surface coefficients for the constant-only case
# with one integrated variable. The large-p polynomial is pre-scaled.
_TAU_MAX = 2.74
_TAU_MIN = -18.83
_TAU_STAR = -1.61
_SMALLP = (2.1659, 1.4412, 0.038269)
_LARGEP = (1.7339, 0.93202, -0.12745, -0.010368)


def mackinnon_pvalue(stat: float) -> float:
    """Approximate asymptotic p-value of a constant-only ADF statistic."""
    if stat > _TAU_MAX:
        return 1.0
    if stat < _TAU_MIN:
        return 0.0
    coef = _SMALLP if stat <= _TAU_STAR else _LARGEP
    z = sum(c * stat**i for i, c in enumerate(coef))
    return float(stats.norm.cdf(z))


@dataclass(frozen=True)
class AdfResult:
    statistic: float
    pvalue: float
    lags: int
    nobs: int

    def __iter__(self):
        return iter((self.statistic, self.pvalue))


def adf_test(series, lags: int = 1) -> AdfResult:
    """Regress dy_t on a constant, y_{t-1} and ``lags`` lagged differences.

    The statistic is the t ratio on y_{t-1}.
    """
    y = np.asarray(series, dtype=float)
    if not np.all(np.isfinite(y)):
        raise ValueError("series contains missing values")
    dy = np.diff(y)
    n = len(dy) - lags
    if n <= lags + 3:
        raise ValueError("series too short for the requested lag order")
    target = dy[lags:]
    cols = [y[lags:-1]]
    for i in range(1, lags + 1):
        cols.append(dy[lags - i : len(dy) - i])
    res = ols(target, np.column_stack(cols))
    stat = float(res.params[1] / res.bse[1])
    return AdfResult(stat, mackinnon_pvalue(stat), lags, n)
