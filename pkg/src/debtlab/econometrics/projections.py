"""Horizon-by-horizon direct regressions for cumulative responses."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .regression import RegressionResult, ols


@dataclass(frozen=True)
class HorizonFit:
    h: int
    nobs: int
    result: RegressionResult

    def coef(self, name: str) -> float:
        return self.result.coef(name)

    def se(self, name: str) -> float:
        return self.result.stderr(name)


@dataclass(frozen=True)
class ProjectionTable:
    horizons: tuple[HorizonFit, ...]
    shocks: tuple[str, ...]
    truncated: tuple[int, ...] = field(default=())

    def path(self, name: str) -> np.ndarray:
        return np.array([f.coef(name) for f in self.horizons])

    def se_path(self, name: str) -> np.ndarray:
        return np.array([f.se(name) for f in self.horizons])

    def at(self, h: int) -> HorizonFit:
        for f in self.horizons:
            if f.h == h:
                return f
        raise KeyError(h)


def local_projections(
    response,
    shocks: Mapping[str, np.ndarray],
    controls: Mapping[str, np.ndarray] | None = None,
    H: int = 5,
    cumulative: bool = True,
    hac: bool | int = True,
    base_lag: int = 1,
) -> ProjectionTable:
    """One regression per horizon h = 0..H.

    Parameters
    ----------
    response : array_like, shape (T,)
        Level of the outcome, aligned with the shocks by period t.
    shocks, controls : mapping of name -> array, shape (T,)
        Period-t regressors; controls should already carry their lags
        (pass dy_{t-1} aligned on t). NaN rows are dropped per horizon.
    cumulative : bool
        Dependent variable is y_{t+h} - y_{t-base_lag} when True, else y_{t+h}.
    hac : bool or int
        True attaches Newey-West errors with maxlags = h; an integer fixes
        maxlags at that value for every horizon; False keeps classical errors.
    base_lag : int
        0 measures the change from period t, so h = 0 is identically zero.
    """
    y = np.asarray(response, dtype=float)
    controls = dict(controls or {})
    regs = {**{k: np.asarray(v, dtype=float) for k, v in shocks.items()},
            **{k: np.asarray(v, dtype=float) for k, v in controls.items()}}
    names = list(regs)
    X_all = np.column_stack([regs[n] for n in names]) if names else np.empty((len(y), 0))
    k = len(names) + 1
    T = len(y)
    fits, truncated = [], []
    for h in range(H + 1):
        lead = np.full(T, np.nan)
        lead[: T - h] = y[h:]
        if cumulative:
            base = np.full(T, np.nan)
            base[base_lag:] = y[: T - base_lag]
            dep = lead - base
        else:
            dep = lead
        ok = np.isfinite(dep) & np.all(np.isfinite(X_all), axis=1)
        n_h = int(ok.sum())
        if n_h < k + 3:
            truncated.append(h)
            continue
        res = ols(dep[ok], X_all[ok], names=names)
        if hac is True:
            res = res.with_robust("HAC", maxlags=h)
        elif hac is not False:
            res = res.with_robust("HAC", maxlags=int(hac))
        fits.append(HorizonFit(h, n_h, res))
    if not fits:
        raise ValueError("sample too short for any projection horizon")
    if truncated:
        warnings.warn(f"horizons {truncated} dropped: too few observations", stacklevel=2)
    return ProjectionTable(tuple(fits), tuple(shocks), tuple(truncated))
