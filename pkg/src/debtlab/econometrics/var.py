"""First-order vector autoregression with Cholesky-identified responses."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class VarFit:
    """VAR(1) estimates.

    ``coefs[i, j]`` is the effect of variable j at t-1 on variable i at t.
    ``coef_se`` follows the same layout; ``intercept_se`` matches
    ``intercepts``. ``sigma_u`` divides residual cross-products by
    n - k - 1 (k variables plus a constant per equation).
    """

    coefs: np.ndarray
    intercepts: np.ndarray
    sigma_u: np.ndarray
    coef_se: np.ndarray
    intercept_se: np.ndarray
    resid: np.ndarray
    names: tuple[str, ...]
    nobs: int

    def __iter__(self):
        return iter((self.coefs, self.intercepts, self.sigma_u))

    @property
    def k(self) -> int:
        return self.coefs.shape[0]


def var1_fit(series, names: Sequence[str] | None = None) -> VarFit:
    """Equation-by-equation OLS of each series on a constant and all first lags.

    Parameters
    ----------
    series : array_like, shape (T, k) or a sequence of k equal-length arrays
    """
    if isinstance(series, (list, tuple)):
        data = np.column_stack([np.asarray(s, dtype=float) for s in series])
    else:
        data = np.asarray(series, dtype=float)
    if data.ndim != 2:
        raise ValueError("series must be two-dimensional")
    if not np.all(np.isfinite(data)):
        raise ValueError("VAR input contains missing values")
    T, k = data.shape
    Y = data[1:]
    X = np.column_stack([np.ones(T - 1), data[:-1]])
    n = T - 1
    if n <= k + 1:
        raise ValueError("too few observations for a VAR(1)")
    xtx_inv = np.linalg.inv(X.T @ X)
    B = xtx_inv @ X.T @ Y  # (k+1, k)
    resid = Y - X @ B
    dof = n - (k + 1)
    sigma_u = resid.T @ resid / dof
    se = np.sqrt(np.outer(np.diag(xtx_inv), np.diag(sigma_u)))  # (k+1, k)
    names = tuple(names) if names is not None else tuple(f"y{i + 1}" for i in range(k))
    return VarFit(
        coefs=B[1:].T.copy(),
        intercepts=B[0].copy(),
        sigma_u=sigma_u,
        coef_se=se[1:].T.copy(),
        intercept_se=se[0].copy(),
        resid=resid,
        names=names,
        nobs=n,
    )


@dataclass(frozen=True)
class ImpulseResponse:
    """Orthogonalized responses and variance shares.

    ``irf[h, i, j]`` is the response of variable i at horizon h to a
    one-standard-deviation shock in variable j (original variable order).
    ``fevd[i, j]`` is the share of variable i's ``horizon``-step forecast
    error variance due to shock j.
    """

    irf: np.ndarray
    fevd: np.ndarray
    horizon: int
    ordering: tuple[int, ...]

    def cumulative(self, response: int, shock: int, through: int | None = None) -> float:
        """Sum of responses over horizons 0..``through`` inclusive."""
        h = self.irf.shape[0] - 1 if through is None else through
        return float(self.irf[: h + 1, response, shock].sum())

    def __iter__(self):
        return iter((self.irf, self.fevd))


def _ordering_indices(fit: VarFit, ordering) -> list[int]:
    if ordering is None:
        return list(range(fit.k))
    idx = [fit.names.index(o) if isinstance(o, str) else int(o) for o in ordering]
    if sorted(idx) != list(range(fit.k)):
        raise ValueError("ordering must be a permutation of the variables")
    return idx


def var_irf_fevd(fit: VarFit, horizon: int, ordering: Sequence | None = None) -> ImpulseResponse:
    """Cholesky impulse responses for horizons 0..``horizon`` and the FEVD at ``horizon`` steps.

    The factorization follows ``ordering`` (most exogenous first); results
    are reported back in the fit's variable order.
    """
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    idx = _ordering_indices(fit, ordering)
    P = np.eye(fit.k)[idx]  # permutation: ordered = P @ original
    sig = P @ fit.sigma_u @ P.T
    try:
        chol = np.linalg.cholesky(sig)
    except np.linalg.LinAlgError as exc:
        raise ValueError("residual covariance is not positive definite") from exc
    impact = P.T @ chol @ P  # impact matrix in original order, columns = shocks

    A = fit.coefs
    phi = np.eye(fit.k)
    irf = np.empty((horizon + 1, fit.k, fit.k))
    for h in range(horizon + 1):
        irf[h] = phi @ impact
        phi = A @ phi
    # the h-step forecast error involves responses 0..h-1
    contrib = (irf[:horizon] ** 2).sum(axis=0)
    fevd = contrib / contrib.sum(axis=1, keepdims=True)
    return ImpulseResponse(irf, fevd, horizon, tuple(idx))
