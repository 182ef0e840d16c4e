"""Empirical blocks run on a derived series catalog.

Each function takes a catalog extended by
:func:`debtlab.data_io.catalog.derive_series` and returns plain result
objects; rendering lives in :mod:`debtlab.econ_tables`. Sample windows
are module constants so the tables and their notes agree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..data_io import catalog as C
from ..data_io.catalog import SeriesCatalog, annual_grid, lag, monthly_frame
from .ardl import BoundsResult, ardl_bounds
from .lstar import LstarResult, lstar_fit
from .placebo import PlaceboResult, placebo_interacted
from .projections import ProjectionTable, local_projections
from .regression import ChowResult, WelchResult, chow_test, welch_ttest
from .unitroot import AdfResult, adf_test
from .var import ImpulseResponse, VarFit, var1_fit, var_irf_fevd

PRE_WINDOW = (1991, 2012)
POST_WINDOW = (2013, 2024)
BREAK_YEAR = 2013
VAR_WINDOW = (1994, 2024)
ARDL_WINDOW = (1994, 2024)
LP_WINDOW = (1993, 2024)
LP_HORIZON = 5
FEVD_HORIZON = 5
PLACEBO_WINDOW = (1994, 2024)
PLACEBO_HAC_LAGS = 3

FREE_END = "2012-12"
CAPTIVE_START, CAPTIVE_END = "2016-09", "2024-03"

SUBSAMPLE_VARS = ("r_n", "pi", "eps", "g_n", "rg", "db", "de")
VAR_NAMES = ("eps", "rg", "db")

PLACEBO_COUNTRIES = {"Japan": C.LONG_RATE, "Germany": C.DE_LONG, "UK": C.GB_LONG, "France": C.FR_LONG}
QE_YEARS = {
    "Japan": tuple(range(2013, 2025)),
    "Germany": tuple(range(2015, 2023)),
    "France": tuple(range(2015, 2023)),
    "UK": tuple(range(2009, 2014)) + tuple(range(2020, 2023)),
}


def _window(cat: SeriesCatalog, name: str, lo: int, hi: int) -> np.ndarray:
    years, cols = annual_grid(cat, [name], lo, hi)
    v = cols[name]
    return v[np.isfinite(v)]


# --- subsample comparison ---------------------------------------------------

@dataclass(frozen=True)
class SubsampleRow:
    name: str
    pre_mean: float
    pre_sd: float
    pre_n: int
    post_mean: float
    post_sd: float
    post_n: int
    test: WelchResult


def subsample_stats(cat: SeriesCatalog, names=SUBSAMPLE_VARS) -> list[SubsampleRow]:
    """Means, sample SDs (N-1) and Welch tests for the two windows."""
    rows = []
    for n in names:
        a = _window(cat, n, *PRE_WINDOW)
        b = _window(cat, n, *POST_WINDOW)
        rows.append(SubsampleRow(
            n, float(a.mean()), float(a.std(ddof=1)), len(a),
            float(b.mean()), float(b.std(ddof=1)), len(b), welch_ttest(a, b),
        ))
    return rows


# --- structural break -------------------------------------------------------

def chow_break(cat: SeriesCatalog, break_year: int = BREAK_YEAR) -> ChowResult:
    years, cols = annual_grid(cat, ["db", "rg"], PRE_WINDOW[0], POST_WINDOW[1])
    ok = np.isfinite(cols["db"]) & np.isfinite(cols["rg"])
    y, x, yrs = cols["db"][ok], cols["rg"][ok], years[ok]
    return chow_test(y, x, int((yrs < break_year).sum()), names=["rg"])


# --- VAR --------------------------------------------------------------------

@dataclass(frozen=True)
class VarBlock:
    fit: VarFit
    responses: ImpulseResponse
    adf: dict[str, AdfResult]
    years: tuple[int, int]

    def cumulative_db(self, shock: str, through: int = FEVD_HORIZON - 1) -> float:
        """Cumulative response of the debt change to a one-SD shock over ``through + 1`` years."""
        j = self.fit.names.index(shock)
        return self.responses.cumulative(self.fit.names.index("db"), j, through)


def var_block(cat: SeriesCatalog, window=VAR_WINDOW, horizon: int = FEVD_HORIZON) -> VarBlock:
    years, cols = annual_grid(cat, VAR_NAMES, *window)
    data = np.column_stack([cols[n] for n in VAR_NAMES])
    ok = np.all(np.isfinite(data), axis=1)
    if not ok.any():
        raise ValueError("no complete VAR observations in the window")
    first, last = np.argmax(ok), len(ok) - 1 - np.argmax(ok[::-1])
    if not ok[first : last + 1].all():
        raise ValueError("VAR sample has interior gaps")
    data = data[first : last + 1]
    fit = var1_fit(data, names=list(VAR_NAMES))
    irf = var_irf_fevd(fit, horizon, ordering=list(VAR_NAMES))
    adf = {n: adf_test(data[:, j], lags=1) for j, n in enumerate(VAR_NAMES)}
    return VarBlock(fit, irf, adf, (int(years[first]), int(years[last])))


# --- ARDL -------------------------------------------------------------------

def ardl_block(cat: SeriesCatalog, window=ARDL_WINDOW) -> BoundsResult:
    """db_t on b_{t-1}, eps_{t-1}, rg_{t-1} (levels) and db_{t-1}."""
    lo, hi = window
    years, cols = annual_grid(cat, ["db", "b", "eps", "rg"], lo - 1, hi)
    rows = {
        "db": cols["db"],
        "b_lag": lag(cols["b"]),
        "eps_lag": lag(cols["eps"]),
        "rg_lag": lag(cols["rg"]),
        "db_lag": lag(cols["db"]),
    }
    m = np.column_stack(list(rows.values()))
    ok = np.all(np.isfinite(m), axis=1) & (years >= lo)
    return ardl_bounds(
        rows["db"][ok],
        [rows["b_lag"][ok], rows["eps_lag"][ok], rows["rg_lag"][ok]],
        [rows["db_lag"][ok]],
        level_names=["b_lag", "eps_lag", "rg_lag"],
        short_names=["db_lag"],
    )


# --- local projections ------------------------------------------------------

def lp_block(cat: SeriesCatalog, window=LP_WINDOW, H: int = LP_HORIZON) -> ProjectionTable:
    """Cumulative debt response b_{t+h} - b_{t-1} to eps_t and rg_t, control db_{t-1}."""
    lo, hi = window
    years, cols = annual_grid(cat, ["b", "eps", "rg", "db"], lo - 1, hi)
    keep = years >= lo - 1
    b = cols["b"][keep]
    eps, rg, db_lag = cols["eps"][keep], cols["rg"][keep], lag(cols["db"])[keep]
    # the first grid year only supplies b_{t-1}
    eps[0] = rg[0] = np.nan
    return local_projections(b, {"eps": eps, "rg": rg}, {"db_lag": db_lag}, H=H)


# --- placebo ----------------------------------------------------------------

@dataclass(frozen=True)
class PlaceboRow:
    country: str
    raw: PlaceboResult
    qe: PlaceboResult | None
    threshold: float


def captive_threshold(phi: np.ndarray) -> float:
    """Default captive cut-off: the sample median of the country's proxy."""
    return float(np.median(phi[np.isfinite(phi)]))


def placebo_block(cat: SeriesCatalog, window=PLACEBO_WINDOW, thresholds: dict | None = None) -> list[PlaceboRow]:
    rows = []
    for country, sid in PLACEBO_COUNTRIES.items():
        if sid not in cat or C.US_LONG not in cat:
            continue
        years, cols = annual_grid(cat, [sid, C.US_LONG], *window)
        r, us = cols[sid], cols[C.US_LONG]
        ok = np.isfinite(r) & np.isfinite(us)
        years, r, us = years[ok], r[ok], us[ok]
        phi = -(r - us)
        cut = (thresholds or {}).get(country, captive_threshold(phi))
        cap = (phi > cut).astype(float)
        qe = np.isin(years, QE_YEARS[country]).astype(float)
        raw = placebo_interacted(r, us, cap, maxlags=PLACEBO_HAC_LAGS)
        ctl = placebo_interacted(r, us, cap, qe_controls=qe, maxlags=PLACEBO_HAC_LAGS)
        rows.append(PlaceboRow(country, raw, ctl, cut))
    if not rows:
        raise ValueError("placebo needs the US long rate and at least one country series")
    return rows


# --- LSTAR ------------------------------------------------------------------

@dataclass(frozen=True)
class LstarRow:
    label: str
    fit: LstarResult


def pass_through_samples(cat: SeriesCatalog) -> dict[str, tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """(months, de_m, dpi_m) for the free, captive and full samples."""
    out = {}
    for label, (lo, hi) in {
        "free": (None, FREE_END),
        "captive": (CAPTIVE_START, CAPTIVE_END),
        "full": (None, None),
    }.items():
        idx, cols = monthly_frame(cat, ["de_m", "dpi_m"], lo, hi)
        out[label] = (idx, cols["de_m"], cols["dpi_m"])
    return out


def lstar_block(cat: SeriesCatalog) -> list[LstarRow]:
    samples = pass_through_samples(cat)
    labels = {"free": "Pre-QQE (Free)", "captive": "YCC-Captive", "full": "Full sample"}
    return [LstarRow(labels[k], lstar_fit(samples[k][1], samples[k][2])) for k in ("free", "captive", "full")]
