"""Logistic smooth-transition regression in a single threshold variable.

Model: y = a + (b1 + b2 * G(x)) * x with G(x) = 1 / (1 + exp(-gamma (x - c))).
For fixed (gamma, c) the model is linear in (a, b1, b2), so the fit
concentrates those out and searches only over (gamma, c).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import optimize
from scipy.special import expit

from .regression import RegressionResult, ols

GAMMA_BOUNDS = (0.1, 50.0)
GRID_SIZE = 50


@dataclass(frozen=True)
class LstarResult:
    gamma: float
    c: float
    params: np.ndarray  # (a, b1, b2)
    rsquared: float
    linear: RegressionResult
    delta_r2: float
    converged: bool
    nobs: int

    def transition(self, x) -> np.ndarray:
        return expit(self.gamma * (np.asarray(x, dtype=float) - self.c))

    def predict(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        a, b1, b2 = self.params
        return a + (b1 + b2 * self.transition(x)) * x


def _ssr(x: np.ndarray, y: np.ndarray, gamma: float, c: float) -> tuple[float, np.ndarray]:
    g = expit(gamma * (x - c))
    X = np.column_stack([np.ones_like(x), x, g * x])
    beta, *_ = np.linalg.lstsq(X, y, rcond=None)
    r = y - X @ beta
    return float(r @ r), beta


def lstar_fit(x, y, grid_size: int = GRID_SIZE, refine: bool = True) -> LstarResult:
    """Grid search over (gamma, c), then a Nelder-Mead polish.

    gamma is searched on a log grid within :data:`GAMMA_BOUNDS`; c on an
    even grid between the 10th and 90th percentiles of ``x``. The polish
    works on (log gamma, c) and clips gamma to its bounds, so the estimate
    can sit exactly on the upper bound for sharp thresholds. If the polish
    fails to improve on the grid, the best grid point is returned with
    ``converged=False``.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    ok = np.isfinite(x) & np.isfinite(y)
    x, y = x[ok], y[ok]
    if len(x) < 20:
        raise ValueError("LSTAR needs at least 20 observations")
    lin = ols(y, x)
    tss = float(((y - y.mean()) ** 2).sum())

    lo, hi = np.log(GAMMA_BOUNDS[0]), np.log(GAMMA_BOUNDS[1])
    gammas = np.exp(np.linspace(lo, hi, grid_size))
    cs = np.linspace(*np.percentile(x, [10, 90]), grid_size)
    best = (np.inf, GAMMA_BOUNDS[0], float(cs[0]))
    for g in gammas:
        for c in cs:
            s, _ = _ssr(x, y, g, c)
            if s < best[0]:
                best = (s, float(g), float(c))

    ssr, gamma, c = best
    converged = not refine
    if refine:
        def objective(theta):
            lg = np.clip(theta[0], lo, hi)
            return _ssr(x, y, float(np.exp(lg)), float(theta[1]))[0]

        opt = optimize.minimize(
            objective,
            x0=[np.log(gamma), c],
            method="Nelder-Mead",
            options={"xatol": 1e-8, "fatol": 1e-12, "maxiter": 4000},
        )
        if opt.fun <= ssr:
            ssr = float(opt.fun)
            gamma = float(np.exp(np.clip(opt.x[0], lo, hi)))
            c = float(opt.x[1])
        converged = bool(opt.success)

    ssr, params = _ssr(x, y, gamma, c)
    # the linear model is nested (b2 = 0), so this cannot fall below the linear fit
    r2 = 1.0 - ssr / tss if tss > 0 else 1.0
    return LstarResult(
        gamma=gamma,
        c=c,
        params=params,
        rsquared=r2,
        linear=lin,
        delta_r2=r2 - lin.rsquared,
        converged=converged,
        nobs=len(x),
    )
