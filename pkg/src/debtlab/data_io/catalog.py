"""Series catalogs loaded from a snapshot directory, plus derived indicators.

A snapshot directory holds one ``<SERIES_ID>.csv`` per series and a
``VINTAGE`` text file whose first line is the vintage label.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .series import TimeSeries, align, combine, load_csv, month_index

FIXTURE_ENV = "DEBTLAB_FIXTURES"
PAPER_VINTAGE = "2026-03"

# Source identifiers (FRED, plus two flow-of-funds holdings series)
NOMINAL_GDP = "JPNNGDP"
REAL_GDP = "JPNRGDPEXP"
FX = "DEXJPUS"
CPI = "JPNCPIALLMINMEI"
LONG_RATE = "IRLTLT01JPM156N"
POLICY_RATE = "IRSTCI01JPM156N"
DEBT = "GGGDTAJPA188N"
UNEMPLOYMENT = "LRHUTTTTJPM156S"
FOREIGN_HOLDINGS = "JGB_FOREIGN_HOLDINGS"
TOTAL_OUTSTANDING = "JGB_TOTAL_OUTSTANDING"
US_LONG = "IRLTLT01USM156N"
US_POLICY = "FEDFUNDS"
US_CPI = "CPIAUCSL"
DE_LONG = "IRLTLT01DEM156N"
DE_SHORT = "IR3TIB01DEM156N"
DE_CPI = "DEUCPIALLMINMEI"
GB_LONG = "IRLTLT01GBM156N"
FR_LONG = "IRLTLT01FRM156N"

CORE_IDS = (NOMINAL_GDP, REAL_GDP, FX, CPI, LONG_RATE, POLICY_RATE, DEBT, UNEMPLOYMENT)


@dataclass
class SeriesCatalog:
    series: dict[str, TimeSeries] = field(default_factory=dict)
    vintage: str = "unlabelled"

    def __contains__(self, key: str) -> bool:
        return key in self.series

    def __getitem__(self, key: str) -> TimeSeries:
        try:
            return self.series[key]
        except KeyError:
            raise KeyError(f"series {key!r} not in catalog (vintage {self.vintage})") from None

    def add(self, ts: TimeSeries) -> None:
        if ts.name in self.series:
            raise ValueError(f"duplicate series id {ts.name!r}")
        self.series[ts.name] = ts

    def ids(self) -> list[str]:
        return sorted(self.series)

    def missing(self, ids) -> list[str]:
        return [i for i in ids if i not in self.series]


def resolve_fixture_dir(explicit: str | os.PathLike | None = None) -> Path | None:
    """Explicit path first, then the environment override."""
    if explicit:
        return Path(explicit)
    env = os.environ.get(FIXTURE_ENV)
    return Path(env) if env else None


def load_catalog(directory) -> SeriesCatalog:
    directory = Path(directory)
    if not directory.is_dir():
        raise FileNotFoundError(
            f"fixture directory {directory} not found; pass --fixtures or set {FIXTURE_ENV}"
        )
    vintage_file = directory / "VINTAGE"
    vintage = vintage_file.read_text(encoding="utf-8").splitlines()[0].strip() if vintage_file.exists() else "unlabelled"
    cat = SeriesCatalog(vintage=vintage)
    for path in sorted(directory.glob("*.csv")):
        cat.add(load_csv(path))
    if not cat.series:
        raise FileNotFoundError(f"no CSV series in {directory}")
    return cat


# --- derived series ---------------------------------------------------------

def _yoy_pct(ts: TimeSeries, name: str) -> TimeSeries:
    """Percent change on the same period one year earlier."""
    prev = {i + 12: v for i, v in zip(ts.index, ts.values)}
    idx = [i for i in ts.index if i in prev]
    cur = ts.as_dict()
    vals = [100.0 * (cur[i] / prev[i] - 1.0) for i in idx]
    return TimeSeries(name, tuple(idx), np.array(vals, float), ts.freq,
                      {"parents": (ts.name,), "formula": "100*(x_t/x_{t-1y}-1)", "units": "percent"})


def _diff(ts: TimeSeries, name: str, formula: str = "x_t - x_{t-1}") -> TimeSeries:
    step = {"A": 12, "Q": 3, "M": 1}[ts.freq]
    cur = ts.as_dict()
    idx = [i for i in ts.index if i - step in cur]
    vals = [cur[i] - cur[i - step] for i in idx]
    return TimeSeries(name, tuple(idx), np.array(vals, float), ts.freq,
                      {"parents": (ts.name,), "formula": formula})


def _put(cat: SeriesCatalog, ts: TimeSeries) -> None:
    cat.series[ts.name] = ts


def derive_series(cat: SeriesCatalog) -> SeriesCatalog:
    """Extend ``cat`` with the annual and monthly indicators used by the tables.

    Annual (percent unless noted): ``r_n`` long yield, ``pi`` CPI inflation,
    ``g_n`` nominal GDP growth, ``eps`` = pi - r_n, ``rg`` = r_n - g_n,
    ``b`` gross debt/GDP, ``db`` its change (pp), ``e`` JPY/USD level,
    ``de`` its change (yen), ``de_pct`` its percent change, ``policy``,
    ``phi_proxy`` = -(r_n - policy), ``phi`` = 1 - foreign/total holdings,
    ``real_debt`` index (2010 = 100) and ``r_real`` = r_n - pi.
    Monthly: ``pi_m`` year-on-year inflation, ``dpi_m`` its monthly change,
    ``de_m`` the monthly change in JPY/USD.
    Only indicators whose parents are present are added.
    """
    out = SeriesCatalog(dict(cat.series), cat.vintage)
    s = out.series

    def annual(key):
        return s[key].to_annual("mean") if key in s else None

    if LONG_RATE in s:
        _put(out, annual(LONG_RATE).rename("r_n", parents=(LONG_RATE,), formula="annual mean"))
    if CPI in s:
        cpi_a = annual(CPI)
        _put(out, _yoy_pct(cpi_a, "pi"))
        cpi_m = s[CPI]
        pi_m = _yoy_pct(cpi_m, "pi_m")
        _put(out, pi_m)
        _put(out, _diff(pi_m, "dpi_m"))
    if NOMINAL_GDP in s:
        _put(out, _yoy_pct(annual(NOMINAL_GDP), "g_n"))
    if DEBT in s:
        _put(out, s[DEBT].to_annual("mean").rename("b", parents=(DEBT,), formula="identity"))
        _put(out, _diff(s["b"], "db"))
    if FX in s:
        e = annual(FX).rename("e", parents=(FX,), formula="annual mean")
        _put(out, e)
        _put(out, _diff(e, "de"))
        _put(out, _yoy_pct(e, "de_pct"))
        fx_m = s[FX] if s[FX].freq == "M" else None
        if fx_m is not None:
            _put(out, _diff(fx_m, "de_m"))
    if POLICY_RATE in s:
        _put(out, annual(POLICY_RATE).rename("policy", parents=(POLICY_RATE,), formula="annual mean"))
    if "pi" in s and "r_n" in s:
        _put(out, combine("eps", [s["pi"], s["r_n"]], lambda p, r: p - r, "pi - r_n"))
        _put(out, combine("r_real", [s["r_n"], s["pi"]], lambda r, p: r - p, "r_n - pi"))
    if "r_n" in s and "g_n" in s:
        _put(out, combine("rg", [s["r_n"], s["g_n"]], lambda r, g: r - g, "r_n - g_n"))
    if "r_n" in s and "policy" in s:
        _put(out, combine("phi_proxy", [s["r_n"], s["policy"]], lambda r, p: -(r - p), "-(r_n - policy)"))
    if FOREIGN_HOLDINGS in s and TOTAL_OUTSTANDING in s:
        _put(out, combine("phi", [annual(FOREIGN_HOLDINGS), annual(TOTAL_OUTSTANDING)],
                          lambda f, t: 1.0 - f / t, "1 - foreign/total"))
    if DEBT in s and NOMINAL_GDP in s and CPI in s:
        _put(out, real_debt_index(s["b"], annual(NOMINAL_GDP), annual(CPI)))
    return out


REAL_DEBT_BASE_YEAR = 2010


def real_debt_index(b: TimeSeries, gdp: TimeSeries, cpi: TimeSeries, base_year: int = REAL_DEBT_BASE_YEAR) -> TimeSeries:
    """Debt stock (ratio x nominal GDP) deflated by CPI, 100 in ``base_year``.

    Falls back to the first common year when ``base_year`` is unavailable.
    """
    idx, (bv, gv, cv) = align(b, gdp, cpi)
    real = bv * gv / cv
    years = [i // 12 for i in idx]
    j = years.index(base_year) if base_year in years else 0
    vals = 100.0 * real / real[j] if len(real) else real
    return TimeSeries("real_debt", idx, vals, "A", {
        "parents": (b.name, gdp.name, cpi.name),
        "formula": f"b*gdp/cpi, 100 in {years[j] if years else base_year}",
    })


def annual_frame(cat: SeriesCatalog, names, start: int | None = None, end: int | None = None):
    """Aligned annual arrays for ``names`` restricted to [start, end]."""
    series = [cat[n] for n in names]
    if start is not None or end is not None:
        series = [s.window(str(start) if start else None, str(end) if end else None) for s in series]
    idx, arrays = align(*series)
    years = np.array([i // 12 for i in idx])
    return years, dict(zip(names, arrays))


def year_of(label: str) -> int:
    return month_index(label) // 12


def annual_grid(cat: SeriesCatalog, names, start: int, end: int):
    """Consecutive years ``start..end`` with NaN where a series has no value.

    Unlike :func:`annual_frame` nothing is dropped, so shifting an array by
    one position is a one-year lag.
    """
    years = np.arange(start, end + 1)
    out = {}
    for n in names:
        d = cat[n].to_annual().as_dict()
        out[n] = np.array([d.get(int(y) * 12, np.nan) for y in years], dtype=float)
    return years, out


def monthly_frame(cat: SeriesCatalog, names, start: str | None = None, end: str | None = None):
    """Aligned monthly arrays (complete cases) within [start, end]."""
    series = [cat[n].window(start, end) for n in names]
    idx, arrays = align(*series)
    return np.array(idx), dict(zip(names, arrays))


def lag(x: np.ndarray, k: int = 1) -> np.ndarray:
    """Shift forward by ``k`` positions, padding with NaN."""
    out = np.full(len(x), np.nan)
    if k < len(x):
        out[k:] = x[: len(x) - k]
    return out
