"""Least squares with classical, HC and Newey-West covariances."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np
from scipy import stats


class RankDeficientError(ValueError):
    """Raised when a regressor is a linear combination of earlier columns."""

    def __init__(self, column: int, name: str | None = None):
        self.column = column
        self.name = name
        label = f" ({name})" if name else ""
        super().__init__(f"design matrix is rank deficient at column {column}{label}")


@dataclass(frozen=True)
class RegressionResult:
    """OLS fit.

    ``bse``/``cov`` are classical; ``robust_bse``/``robust_cov`` hold whatever
    :func:`with_robust` attached, tagged by ``cov_type``. Inference helpers
    use the robust covariance when one is attached (normal reference) and
    the classical one otherwise (Student t reference).
    """

    params: np.ndarray
    bse: np.ndarray
    cov: np.ndarray
    rsquared: float
    nobs: int
    resid: np.ndarray
    names: tuple[str, ...]
    exog: np.ndarray
    endog: np.ndarray
    has_const: bool
    robust_bse: np.ndarray | None = None
    robust_cov: np.ndarray | None = None
    cov_type: str = "classical"

    @property
    def k(self) -> int:
        return self.exog.shape[1]

    @property
    def df_resid(self) -> int:
        return self.nobs - self.k

    @property
    def ssr(self) -> float:
        return float(self.resid @ self.resid)

    @property
    def rsquared_is_uncentered(self) -> bool:
        return not self.has_const

    @property
    def se(self) -> np.ndarray:
        return self.robust_bse if self.robust_bse is not None else self.bse

    @property
    def vcov(self) -> np.ndarray:
        return self.robust_cov if self.robust_cov is not None else self.cov

    @property
    def tvalues(self) -> np.ndarray:
        with np.errstate(divide="ignore", invalid="ignore"):
            return self.params / self.se

    @property
    def pvalues(self) -> np.ndarray:
        t = np.abs(self.tvalues)
        if self.robust_cov is not None:
            return 2 * stats.norm.sf(t)
        return 2 * stats.t.sf(t, self.df_resid)

    def conf_int(self, level: float = 0.90) -> np.ndarray:
        q = 0.5 + level / 2
        crit = stats.norm.ppf(q) if self.robust_cov is not None else stats.t.ppf(q, self.df_resid)
        return np.column_stack([self.params - crit * self.se, self.params + crit * self.se])

    def index(self, name: str) -> int:
        return self.names.index(name)

    def coef(self, name: str) -> float:
        return float(self.params[self.index(name)])

    def stderr(self, name: str) -> float:
        return float(self.se[self.index(name)])

    def pvalue(self, name: str) -> float:
        return float(self.pvalues[self.index(name)])

    def with_robust(self, kind: str = "HAC", maxlags: int = 0) -> "RegressionResult":
        """Attach a robust covariance: ``"HAC"`` (with ``maxlags``), ``"HC0"`` or ``"HC3"``."""
        if kind == "HAC":
            cov = hac_cov(self, maxlags)
            tag = f"HAC({maxlags})"
        elif kind == "HC0":
            cov = hac_cov(self, 0)
            tag = "HC0"
        elif kind == "HC3":
            cov = hc3_cov(self)
            tag = "HC3"
        else:
            raise ValueError(f"unknown robust covariance {kind!r}")
        return replace(self, robust_cov=cov, robust_bse=np.sqrt(np.diag(cov)), cov_type=tag)


def _as_design(X, intercept: bool, names: Sequence[str] | None) -> tuple[np.ndarray, tuple[str, ...]]:
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    if names is None:
        names = [f"x{i + 1}" for i in range(X.shape[1])]
    names = list(names)
    if len(names) != X.shape[1]:
        raise ValueError("names must match the number of regressor columns")
    if intercept:
        X = np.column_stack([np.ones(X.shape[0]), X])
        names = ["const"] + names
    return X, tuple(names)


def first_dependent_column(X: np.ndarray, tol: float | None = None) -> int | None:
    """Index of the first column that adds no rank, or None if full rank."""
    for j in range(1, X.shape[1] + 1):
        if np.linalg.matrix_rank(X[:, :j], tol=tol) < j:
            return j - 1
    return None


def ols(y, X, intercept: bool = True, names: Sequence[str] | None = None) -> RegressionResult:
    """Ordinary least squares.

    Parameters
    ----------
    y : array_like, shape (n,)
    X : array_like, shape (n,) or (n, k)
        Regressors, without a constant column when ``intercept`` is True.
    intercept : bool
        Prepend a column of ones named ``"const"``.
    names : sequence of str, optional
        Labels for the columns of ``X``.

    Raises
    ------
    RankDeficientError
        With the index (in the final design, constant included) of the
        first column that is collinear with those before it.
    """
    y = np.asarray(y, dtype=float).ravel()
    X, names = _as_design(X, intercept, names)
    n, k = X.shape
    if y.shape[0] != n:
        raise ValueError("y and X have different lengths")
    if not np.all(np.isfinite(y)) or not np.all(np.isfinite(X)):
        raise ValueError("missing or non-finite values in regression data")
    if n <= k:
        raise ValueError(f"need more observations ({n}) than regressors ({k})")
    bad = first_dependent_column(X)
    if bad is not None:
        raise RankDeficientError(bad, names[bad])

    # QR keeps the normal-equation conditioning out of the estimate
    q, r = np.linalg.qr(X)
    params = np.linalg.solve(r, q.T @ y)
    resid = y - X @ params
    ssr = float(resid @ resid)
    has_const = intercept or bool(np.any(np.all(X == X[0], axis=0)))
    tss = float(((y - y.mean()) ** 2).sum()) if has_const else float(y @ y)
    rsq = 1.0 - ssr / tss if tss > 0 else 1.0
    r_inv = np.linalg.inv(r)
    xtx_inv = r_inv @ r_inv.T
    sigma2 = ssr / (n - k)
    cov = sigma2 * xtx_inv
    return RegressionResult(
        params=params,
        bse=np.sqrt(np.diag(cov)),
        cov=cov,
        rsquared=rsq,
        nobs=n,
        resid=resid,
        names=names,
        exog=X,
        endog=y,
        has_const=has_const,
    )


def _bread(result: RegressionResult) -> np.ndarray:
    return np.linalg.inv(result.exog.T @ result.exog)


def hac_cov(result: RegressionResult, maxlags: int) -> np.ndarray:
    """Newey-West covariance with Bartlett weights 1 - l/(maxlags+1).

    No small-sample scaling, so ``maxlags=0`` is exactly the HC0 sandwich.
    """
    if maxlags < 0:
        raise ValueError("maxlags must be non-negative")
    X, u = result.exog, result.resid
    scores = X * u[:, None]
    meat = scores.T @ scores
    for lag in range(1, min(maxlags, len(u) - 1) + 1):
        w = 1.0 - lag / (maxlags + 1.0)
        gamma = scores[lag:].T @ scores[:-lag]
        meat += w * (gamma + gamma.T)
    bread = _bread(result)
    return bread @ meat @ bread


def hac_se(result: RegressionResult, maxlags: int) -> np.ndarray:
    return np.sqrt(np.diag(hac_cov(result, maxlags)))


def hc3_cov(result: RegressionResult) -> np.ndarray:
    X, u = result.exog, result.resid
    bread = _bread(result)
    leverage = np.einsum("ij,jk,ik->i", X, bread, X)
    adj = u / (1.0 - leverage)
    scores = X * adj[:, None]
    return bread @ (scores.T @ scores) @ bread


def wald_test(result: RegressionResult, names: Sequence[str]) -> tuple[float, float]:
    """Chi-square Wald test that the named coefficients are jointly zero.

    Uses the attached robust covariance when present.
    """
    idx = [result.index(n) for n in names]
    b = result.params[idx]
    v = result.vcov[np.ix_(idx, idx)]
    stat = float(b @ np.linalg.solve(v, b))
    return stat, float(stats.chi2.sf(stat, len(idx)))


def f_test_zero(result: RegressionResult, names: Sequence[str]) -> tuple[float, float, tuple[int, int]]:
    """Classical F test that the named coefficients are jointly zero."""
    idx = [result.index(n) for n in names]
    b = result.params[idx]
    v = result.cov[np.ix_(idx, idx)]
    q = len(idx)
    f = float(b @ np.linalg.solve(v, b)) / q
    dof = (q, result.df_resid)
    return f, float(stats.f.sf(f, *dof)), dof


@dataclass(frozen=True)
class WelchResult:
    t: float
    p: float
    diff: float

    def __iter__(self):
        return iter((self.t, self.p, self.diff))


def welch_ttest(sample_a, sample_b) -> WelchResult:
    """Unequal-variance two-sided t test; ``diff`` is mean(b) - mean(a)."""
    a = np.asarray(sample_a, dtype=float)
    b = np.asarray(sample_b, dtype=float)
    diff = float(b.mean() - a.mean())
    if np.array_equal(np.sort(a), np.sort(b)):
        return WelchResult(0.0, 1.0, diff)
    res = stats.ttest_ind(b, a, equal_var=False)
    return WelchResult(float(res.statistic), float(res.pvalue), diff)


@dataclass(frozen=True)
class ChowResult:
    F: float
    p: float
    df: tuple[int, int]
    pooled: RegressionResult
    first: RegressionResult
    second: RegressionResult

    def __iter__(self):
        return iter((self.F, self.p, (self.pooled, self.first, self.second)))


def chow_test(y, x, break_index: int, names: Sequence[str] | None = None) -> ChowResult:
    """Parameter-equality F test with the break before observation ``break_index``."""
    y = np.asarray(y, dtype=float)
    x = np.asarray(x, dtype=float)
    pooled = ols(y, x, names=names)
    k = pooled.k
    n1, n2 = break_index, len(y) - break_index
    if n1 <= k or n2 <= k:
        raise ValueError(f"each regime needs more than {k} observations (got {n1} and {n2})")
    first = ols(y[:break_index], x[:break_index], names=names)
    second = ols(y[break_index:], x[break_index:], names=names)
    rss_u = first.ssr + second.ssr
    df2 = len(y) - 2 * k
    num = max(pooled.ssr - rss_u, 0.0) / k
    F = num / (rss_u / df2) if rss_u > 0 else (0.0 if num == 0 else np.inf)
    return ChowResult(F, float(stats.f.sf(F, k, df2)), (k, df2), pooled, first, second)


def stars(p: float) -> str:
    if p < 0.01:
        return "***"
    if p < 0.05:
        return "**"
    if p < 0.10:
        return "*"
    return ""
