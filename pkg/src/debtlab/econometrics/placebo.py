"""Regime-interacted sensitivity of a domestic yield to the US yield."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .regression import RankDeficientError, RegressionResult, ols

HAC_LAGS = 3


@dataclass(frozen=True)
class PlaceboResult:
    beta_free: float
    beta_free_se: float
    beta_captive: float
    wald_p: float
    nobs: int
    result: RegressionResult
    interaction_dropped: bool = False

    def __iter__(self):
        return iter((self.beta_free, self.beta_captive, self.wald_p))


def placebo_interacted(
    country_rate,
    us_rate,
    captive_dummy,
    qe_controls=None,
    maxlags: int = HAC_LAGS,
) -> PlaceboResult:
    """r_c = a + b_free r_US + b_I r_US*Captive + d Captive [+ QE + r_US*QE] + e.

    ``beta_captive`` is b_free + b_I; ``wald_p`` tests b_I = 0 with
    Newey-West errors. A dummy that never switches on makes the interaction
    unidentified: it is dropped with a warning and ``beta_captive`` equals
    ``beta_free`` with ``wald_p`` NaN.
    """
    r = np.asarray(country_rate, dtype=float)
    us = np.asarray(us_rate, dtype=float)
    cap = np.asarray(captive_dummy, dtype=float)
    cols = {"r_us": us, "r_us_x_captive": us * cap, "captive": cap}
    if qe_controls is not None:
        qe = np.asarray(qe_controls, dtype=float)
        cols["qe"] = qe
        cols["r_us_x_qe"] = us * qe
    ok = np.isfinite(r) & np.all(np.isfinite(np.column_stack(list(cols.values()))), axis=1)

    dropped = False
    names = list(cols)
    while True:
        try:
            X = np.column_stack([cols[n][ok] for n in names])
            res = ols(r[ok], X, names=names).with_robust("HAC", maxlags=maxlags)
            break
        except RankDeficientError as err:
            bad = err.name
            if bad in ("r_us_x_captive", "captive"):
                dropped = True
                names = [n for n in names if n not in ("r_us_x_captive", "captive")]
            elif bad in ("qe", "r_us_x_qe"):
                names = [n for n in names if n not in ("qe", "r_us_x_qe")]
            else:
                raise
            warnings.warn(f"dropping collinear regime terms ({bad})", stacklevel=2)

    b_free = res.coef("r_us")
    if dropped:
        return PlaceboResult(b_free, res.stderr("r_us"), b_free, float("nan"), res.nobs, res, True)
    b_int = res.coef("r_us_x_captive")
    return PlaceboResult(
        b_free, res.stderr("r_us"), b_free + b_int, res.pvalue("r_us_x_captive"), res.nobs, res
    )
