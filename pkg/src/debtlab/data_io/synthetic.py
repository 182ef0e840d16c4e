"""Seeded synthetic snapshot in the fixture layout, for demos and smoke tests.

The numbers are invented. They carry a 2013 regime change and a
captive-period insulation effect so every estimator has something to
find, but they are not the archived data and the vintage label says so.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from . import catalog as C
from .series import TimeSeries, write_csv

DEMO_VINTAGE = "synthetic-demo"
FIRST_YEAR, LAST_YEAR = 1990, 2025


def _piecewise(months: np.ndarray, knots: list[tuple[int, float]]) -> np.ndarray:
    xs = [y * 12 for y, _ in knots]
    return np.interp(months, xs, [v for _, v in knots])


def demo_series(seed: int = 2026) -> list[TimeSeries]:
    rng = np.random.default_rng(seed)
    start = FIRST_YEAR * 12
    months = np.arange(start, (LAST_YEAR + 1) * 12)
    n = len(months)
    year = months // 12
    captive = (months >= 2016 * 12 + 8) & (months <= 2024 * 12 + 2)
    free = year < 2013

    drift = np.select([free, year <= 2015, year <= 2020], [-0.15, 1.0, 0.0], 0.7)
    de = drift + rng.normal(0, 2.5, n)
    fx = 140 + np.cumsum(de)

    # pass-through is steeper, with a kink above 3 yen, in the captive window
    slope = np.where(captive, 0.03, 0.005) + np.where(captive & (de > 3), 0.04, 0.0)
    trend_inf = _piecewise(months, [(1990, 3.0), (1995, 0.2), (2012, -0.3), (2014, 1.5), (2021, 0.3), (2023, 3.0), (2025, 2.5)])
    yoy = trend_inf + np.cumsum(slope * de) * 0.15 + rng.normal(0, 0.15, n)
    cpi = 100 * np.exp(np.cumsum(yoy / 1200))

    us_long = _piecewise(months, [(1990, 8.5), (2000, 6.0), (2008, 3.7), (2012, 1.8), (2019, 2.1), (2021, 1.5), (2023, 4.0), (2025, 4.3)])
    us_long = us_long + rng.normal(0, 0.2, n)
    pressure = np.where(free, 1.0, np.where(captive, 0.1, 0.4))
    jp_long = _piecewise(months, [(1990, 6.8), (1998, 1.5), (2012, 0.8), (2016, 0.0), (2022, 0.2), (2025, 1.6)])
    jp_long = jp_long + pressure * 0.6 * (us_long - us_long.mean()) / 2 + rng.normal(0, 0.1, n)
    policy = _piecewise(months, [(1990, 6.0), (1995, 0.5), (1999, 0.0), (2006, 0.3), (2009, 0.1), (2016, -0.1), (2024, 0.1), (2025, 0.5)])

    de_long = us_long - 1.0 + rng.normal(0, 0.25, n) - np.where((year >= 2015) & (year <= 2022), 1.0, 0.0)
    gb_long = us_long + 0.3 + rng.normal(0, 0.25, n)
    fr_long = de_long + 0.4 + rng.normal(0, 0.2, n)
    fedfunds = np.clip(us_long - 2.0 + rng.normal(0, 0.3, n), 0.05, None)
    de_short = np.clip(de_long - 1.5 + rng.normal(0, 0.3, n), -0.6, None)
    us_cpi = 100 * np.exp(np.cumsum((2.5 + rng.normal(0, 0.3, n)) / 1200))
    de_cpi = 100 * np.exp(np.cumsum((1.8 + rng.normal(0, 0.3, n)) / 1200))
    unemp = _piecewise(months, [(1990, 2.1), (2002, 5.4), (2007, 3.8), (2009, 5.1), (2019, 2.4), (2025, 2.5)])

    monthly = {
        C.FX: fx, C.CPI: cpi, C.LONG_RATE: jp_long, C.POLICY_RATE: policy,
        C.UNEMPLOYMENT: unemp + rng.normal(0, 0.05, n), C.US_LONG: us_long, C.US_POLICY: fedfunds,
        C.US_CPI: us_cpi, C.DE_LONG: de_long, C.DE_SHORT: de_short, C.DE_CPI: de_cpi,
        C.GB_LONG: gb_long, C.FR_LONG: fr_long,
    }
    out = [TimeSeries(k, tuple(months.tolist()), np.round(v, 6), "M", {}) for k, v in monthly.items()]

    years = np.arange(FIRST_YEAR, LAST_YEAR)
    g = np.where(years < 2013, 0.5, 1.8) + rng.normal(0, 1.8, len(years))
    gdp = 450 * np.cumprod(1 + g / 100)
    q_idx = tuple(int(y) * 12 + 3 * q for y in years for q in range(4))
    out.append(TimeSeries(C.NOMINAL_GDP, q_idx, np.round(np.repeat(gdp, 4) / 4 * 1000, 1), "Q", {}))
    out.append(TimeSeries(C.REAL_GDP, q_idx, np.round(np.repeat(gdp / np.linspace(0.95, 1.05, len(years)), 4) / 4 * 1000, 1), "Q", {}))

    yr_long = np.array([jp_long[year == y].mean() for y in years])
    deficit = np.where(years < 2013, 5.0, 2.5) + rng.normal(0, 1.0, len(years))
    b = [65.0]
    for t in range(1, len(years)):
        b.append(b[-1] * (1 + (yr_long[t] - g[t]) / 100) + deficit[t])
    out.append(TimeSeries.annual(C.DEBT, years, np.round(b, 4)))

    foreign = np.linspace(20, 150, len(years)) + rng.normal(0, 5, len(years))
    total = np.linspace(250, 1100, len(years))
    out.append(TimeSeries.annual(C.FOREIGN_HOLDINGS, years, np.round(foreign, 2)))
    out.append(TimeSeries.annual(C.TOTAL_OUTSTANDING, years, np.round(total, 2)))
    return out


def write_demo_bundle(directory, seed: int = 2026) -> Path:
    """Write every demo series plus a VINTAGE file into ``directory``."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    for ts in demo_series(seed):
        write_csv(ts, d / f"{ts.name}.csv")
    (d / "VINTAGE").write_text(f"{DEMO_VINTAGE}\nseed={seed}; invented numbers, not the archived snapshot\n",
                               encoding="utf-8")
    return d
