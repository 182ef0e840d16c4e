"""Direct tests of the captive-share, yen and insulation predictions.

``fair_tests`` bundles four designs on a derived catalog:

* ``yield_test``: nested OLS of the real yield on the US rate, its own lag,
  the captive-share proxy and regime dummies, with two placebo countries.
* ``real_debt_test``: local projections of the real debt index on a large
  depreciation dummy, with a threshold sweep.
* ``pass_through_test``: regime-split and bin-interacted OLS of monthly
  inflation changes on yen changes.
* ``insulation_test``: per-period HC3 slopes of the r-g spread on the US
  rate with a two-sample comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import stats

from ..data_io import catalog as C
from ..data_io.catalog import SeriesCatalog, annual_grid, lag, monthly_frame
from .projections import ProjectionTable, local_projections
from .regression import RankDeficientError, RegressionResult, ols
from .suite import CAPTIVE_END, CAPTIVE_START, FREE_END

HAC_LAGS = 3
YCC_YEARS = tuple(range(2016, 2024))
QQE_YEARS = (2013, 2014, 2015)
YIELD_WINDOW = (1992, 2024)
REAL_DEBT_WINDOW = (1992, 2024)
REAL_DEBT_HORIZON = 5
SWEEP_THRESHOLDS = (5.0, 10.0, 15.0, 20.0)
BASELINE_THRESHOLD = 10.0
PASS_THROUGH_BINS = 4
MIN_PERIOD_N = 4
INSULATION_PERIODS = {
    "Pre-QQE": (1994, 2012),
    "QQE": (2013, 2015),
    "YCC-active": (2016, 2023),
    "Post-YCC": (2024, 2035),
}


# --- captive share and the real yield ---------------------------------------

@dataclass(frozen=True)
class YieldTest:
    models: tuple[RegressionResult, RegressionResult, RegressionResult]
    placebo: dict[str, RegressionResult]

    @property
    def confirmed(self) -> tuple[bool, bool]:
        return tuple(m.coef("phi") < 0 for m in self.models[1:])


def _yield_models(real, glob, phi, years, dummies: bool) -> list[RegressionResult]:
    cols = {"r_global": glob, "lag_dep": lag(real), "phi": phi}
    if dummies:
        cols["ycc"] = np.isin(years, YCC_YEARS).astype(float)
        cols["qqe"] = np.isin(years, QQE_YEARS).astype(float)
    m = np.column_stack([real] + list(cols.values()))
    ok = np.all(np.isfinite(m), axis=1)

    def fit(names):
        X = np.column_stack([cols[n][ok] for n in names])
        return ols(real[ok], X, names=names).with_robust("HAC", maxlags=HAC_LAGS)

    out = [fit(["r_global", "lag_dep"]), fit(["r_global", "lag_dep", "phi"])]
    if dummies:
        out.append(fit(list(cols)))
    return out


def yield_test(cat: SeriesCatalog, window=YIELD_WINDOW) -> YieldTest:
    """Japan: real yield on the US rate, lagged dependent, phi proxy, YCC/QQE dummies.

    Placebos reuse the second model. Germany uses the US rate as the global
    rate and its 3-month rate as the policy rate. The US placebo cannot use
    itself as the global rate, so the German long rate stands in.
    """
    lo, hi = window
    years, a = annual_grid(cat, ["r_real", "phi_proxy", C.US_LONG], lo - 1, hi)
    models = _yield_models(a["r_real"], a[C.US_LONG], a["phi_proxy"], years, dummies=True)

    placebo = {}
    foreign = {
        "US": (C.US_LONG, C.US_CPI, C.US_POLICY, C.DE_LONG),
        "DE": (C.DE_LONG, C.DE_CPI, C.DE_SHORT, C.US_LONG),
    }
    for label, (long_id, cpi_id, pol_id, glob_id) in foreign.items():
        if any(s not in cat for s in (long_id, cpi_id, pol_id, glob_id)):
            continue
        cpi = cat[cpi_id].to_annual()
        yrs, g = annual_grid(cat, [long_id, pol_id, glob_id], lo - 1, hi)
        cd = cpi.as_dict()
        infl = np.array([100 * (cd.get(y * 12, np.nan) / cd.get((y - 1) * 12, np.nan) - 1) for y in yrs])
        real = g[long_id] - infl
        phi = -(g[long_id] - g[pol_id])
        placebo[label] = _yield_models(real, g[glob_id], phi, yrs, dummies=False)[1]
    return YieldTest(tuple(models), placebo)


# --- real debt after large depreciations ------------------------------------

@dataclass(frozen=True)
class RealDebtTest:
    """``lp`` is None when no year crosses the threshold."""

    threshold: float
    lp: ProjectionTable | None
    episodes: tuple[int, ...]

    @property
    def confirmed(self) -> bool:
        if self.lp is None:
            return False
        late = [f.coef("treat") for f in self.lp.horizons if f.h >= 2]
        return bool(late) and all(b < 0 for b in late)


def real_debt_test(cat: SeriesCatalog, threshold: float = BASELINE_THRESHOLD, window=REAL_DEBT_WINDOW,
                   H: int = REAL_DEBT_HORIZON) -> RealDebtTest:
    """Response R_{t+h} - R_t of the real debt index to T_t = 1[de_pct_t > threshold].

    Controls: lagged change of the index, lagged de_pct and inflation.
    HAC errors use a fixed three lags at every horizon.
    """
    lo, hi = window
    years, a = annual_grid(cat, ["real_debt", "de_pct", "pi"], lo - 1, hi)
    R = a["real_debt"]
    dR = R - lag(R)
    treat = np.where(np.isfinite(a["de_pct"]), (a["de_pct"] > threshold).astype(float), np.nan)
    controls = {"dR_lag": lag(dR), "de_lag": lag(a["de_pct"]), "pi": a["pi"]}
    keep = years >= lo
    episodes = tuple(int(y) for y, t in zip(years[keep], treat[keep]) if t == 1)
    try:
        lp = local_projections(
            R[keep], {"treat": treat[keep]}, {k: v[keep] for k, v in controls.items()},
            H=H, hac=HAC_LAGS, base_lag=0,
        )
    except RankDeficientError:
        # no (or only) treated years at this threshold
        lp = None
    return RealDebtTest(threshold, lp, episodes)


def threshold_sweep(cat: SeriesCatalog, thresholds=SWEEP_THRESHOLDS) -> list[RealDebtTest]:
    return [real_debt_test(cat, t) for t in thresholds]


# --- pass-through by regime -------------------------------------------------

@dataclass(frozen=True)
class PassThroughTest:
    free: RegressionResult
    captive: RegressionResult
    interacted: RegressionResult
    bin_edges: np.ndarray

    @property
    def split_confirmed(self) -> bool:
        return self.captive.coef("de") > self.free.coef("de")

    @property
    def interaction_confirmed(self) -> bool:
        return self.interacted.coef("de_x_captive") > 0


def pass_through_test(cat: SeriesCatalog, bins: int = PASS_THROUGH_BINS) -> PassThroughTest:
    """Monthly dpi on de (and |de|) within each regime, then pooled with bin effects."""
    _, free = monthly_frame(cat, ["de_m", "dpi_m"], None, FREE_END)
    _, cap = monthly_frame(cat, ["de_m", "dpi_m"], CAPTIVE_START, CAPTIVE_END)

    def split(d):
        X = np.column_stack([d["de_m"], np.abs(d["de_m"])])
        return ols(d["dpi_m"], X, names=["de", "abs_de"]).with_robust("HAC", maxlags=HAC_LAGS)

    de = np.concatenate([free["de_m"], cap["de_m"]])
    dpi = np.concatenate([free["dpi_m"], cap["dpi_m"]])
    captive = np.concatenate([np.zeros(len(free["de_m"])), np.ones(len(cap["de_m"]))])
    size = np.abs(de)
    edges = np.quantile(size, np.linspace(0, 1, bins + 1))
    which = np.clip(np.searchsorted(edges[1:-1], size, side="right"), 0, bins - 1)
    cols = {"de": de, "de_x_captive": de * captive, "captive": captive}
    for j in range(1, bins):
        cols[f"bin{j + 1}"] = (which == j).astype(float)
    X = np.column_stack(list(cols.values()))
    inter = ols(dpi, X, names=list(cols)).with_robust("HAC", maxlags=HAC_LAGS)
    return PassThroughTest(split(free), split(cap), inter, edges)


# --- period-isolated insulation ---------------------------------------------

@dataclass(frozen=True)
class PeriodSlope:
    label: str
    years: tuple[int, int]
    nobs: int
    result: RegressionResult | None

    @property
    def insufficient(self) -> bool:
        return self.result is None

    @property
    def beta(self) -> float:
        return float("nan") if self.result is None else self.result.coef("r_us")

    @property
    def se(self) -> float:
        return float("nan") if self.result is None else self.result.stderr("r_us")


@dataclass(frozen=True)
class InsulationTest:
    periods: dict[str, PeriodSlope]
    t: float
    p: float

    @property
    def prediction_i(self) -> bool:
        return self.periods["YCC-active"].beta < self.periods["Pre-QQE"].beta

    @property
    def prediction_ii(self) -> bool | None:
        """None when either period lacks data."""
        post, ycc = self.periods["Post-YCC"], self.periods["YCC-active"]
        if post.insufficient or ycc.insufficient:
            return None
        return post.beta > ycc.beta


def slope_difference_test(b1: float, se1: float, b2: float, se2: float) -> tuple[float, float]:
    """Independent-samples z comparison of two slopes (normal reference)."""
    t = (b1 - b2) / np.hypot(se1, se2)
    return float(t), float(2 * stats.norm.sf(abs(t)))


def insulation_test(cat: SeriesCatalog, periods=INSULATION_PERIODS) -> InsulationTest:
    out = {}
    for label, (lo, hi) in periods.items():
        years, a = annual_grid(cat, ["rg", C.US_LONG], lo, hi)
        ok = np.isfinite(a["rg"]) & np.isfinite(a[C.US_LONG])
        n = int(ok.sum())
        res = None
        if n >= MIN_PERIOD_N:
            res = ols(a["rg"][ok], a[C.US_LONG][ok], names=["r_us"]).with_robust("HC3")
        span = (int(years[ok][0]), int(years[ok][-1])) if n else (lo, hi)
        out[label] = PeriodSlope(label, span, n, res)
    pre, ycc = out["Pre-QQE"], out["YCC-active"]
    if pre.insufficient or ycc.insufficient:
        t = p = float("nan")
    else:
        t, p = slope_difference_test(pre.beta, pre.se, ycc.beta, ycc.se)
    return InsulationTest(out, t, p)


@dataclass(frozen=True)
class FairTests:
    yield_test: YieldTest
    real_debt: RealDebtTest
    sweep: list[RealDebtTest]
    pass_through: PassThroughTest
    insulation: InsulationTest


def fair_tests(cat: SeriesCatalog) -> FairTests:
    return FairTests(
        yield_test(cat),
        real_debt_test(cat),
        threshold_sweep(cat),
        pass_through_test(cat),
        insulation_test(cat),
    )
