"""Sustainability corridor geometry in (repression bias, structural growth) space.

The frontier is the line eps + g* = pi + (d - s)/b. Points on or above it
keep the debt ratio from rising when the exchange rate is flat.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core_model import (
    Calibration,
    debt_step,
    exact_step_error,
    nominal_growth,
    stability_check,
)

SQRT2 = math.sqrt(2.0)
BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class Frontier:
    intercept: float
    slope: float = -1.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.intercept):
            raise ValueError("frontier intercept must be finite")
        if self.slope != -1.0:
            raise ValueError("frontier slope is fixed at -1")

    def g_star_at(self, eps: float) -> float:
        return self.intercept - eps


@dataclass(frozen=True)
class OperatingPoint:
    eps: float
    g_n_star: float
    label: str = ""


def _check_b(b: float) -> None:
    if b <= 0:
        raise ValueError("debt ratio must be positive")


def frontier(pi: float, d: float, s: float, b: float) -> Frontier:
    _check_b(b)
    return Frontier(pi + (d - s) / b)


def corridor_width(point: OperatingPoint, front: Frontier) -> float:
    """Signed perpendicular distance to the frontier; positive inside."""
    return ((point.eps + point.g_n_star) - front.intercept) / SQRT2


def epsilon_star(pi: float, d: float, s: float, b: float, g_n_star: float) -> float:
    """Smallest repression bias that keeps debt flat at the given growth."""
    _check_b(b)
    return pi + (d - s) / b - g_n_star


def epsilon_star_exact(pi: float, d: float, s: float, b: float, g_n_star: float) -> float:
    """Break-even bias under the (1+r)/(1+g) factor instead of 1+r-g."""
    _check_b(b)
    return pi + 1 - (1 + g_n_star) * (1 - (d - s) / b)


def g_star_min(pi: float, d: float, s: float, b: float, eps: float) -> float:
    """Smallest structural growth that keeps debt flat at the given bias."""
    _check_b(b)
    return pi + (d - s) / b - eps


def error_band_halfwidth(step_error: float) -> float:
    """Half-width of the band drawn around the frontier.

    The one-year linearization error (share of GDP) is projected onto the
    frontier normal, hence the division by sqrt(2).
    """
    return abs(step_error) / SQRT2


def baseline_point(calib: Calibration, label: str = "baseline") -> OperatingPoint:
    return OperatingPoint(calib.eps, calib.g_n_star, label)


def baseline_frontier(calib: Calibration) -> Frontier:
    return frontier(calib.pi, calib.d, calib.s, calib.b0)


@dataclass(frozen=True)
class CorridorReading:
    width: float
    intercept: float
    epsilon_star: float
    g_star_min: float
    band: float
    verdict: str


def classify(width: float, band: float = 0.0) -> str:
    if abs(width) < BOUNDARY_TOL:
        return "on boundary"
    if abs(width) <= band:
        return "within error band"
    return "inside corridor" if width > 0 else "outside corridor"


def read_corridor(calib: Calibration, point: OperatingPoint | None = None) -> CorridorReading:
    """Width, boundary values and band verdict for a point against ``calib``'s frontier.

    The band uses the linearization error at the point's own rate and
    flat-exchange-rate growth.
    """
    point = point or baseline_point(calib)
    front = baseline_frontier(calib)
    w = corridor_width(point, front)
    r_n = calib.pi - point.eps
    band = error_band_halfwidth(exact_step_error(r_n, point.g_n_star, calib.b0))
    return CorridorReading(
        width=w,
        intercept=front.intercept,
        epsilon_star=epsilon_star(calib.pi, calib.d, calib.s, calib.b0, point.g_n_star),
        g_star_min=g_star_min(calib.pi, calib.d, calib.s, calib.b0, point.eps),
        band=band,
        verdict=classify(w, band),
    )


@dataclass(frozen=True)
class LimitingCase:
    lhs: float
    rhs: float
    reduces: bool

    def __iter__(self):
        return iter((self.lhs, self.rhs, self.reduces))


def limiting_case_condition(calib: Calibration) -> LimitingCase:
    """Zero bias and a flat exchange rate collapse the condition to r - g* <= -d/b.

    ``reduces`` reports whether the full stability check, evaluated on the
    restricted input, agrees with the reduced inequality.
    """
    restricted = calib.with_(pi=calib.r_n)
    lhs = calib.r_n - calib.g_n_star
    rhs = (calib.s - calib.d) / calib.b0
    full = stability_check(restricted, delta_e=0.0)
    return LimitingCase(lhs, rhs, full.stable == (lhs <= rhs))


def debt_change(calib: Calibration, delta_e: float = 0.0) -> float:
    """One-year change in the debt ratio at the calibration's own settings."""
    g = nominal_growth(calib.g_n_star, calib.alpha, calib.beta, calib.e_bar, delta_e)
    return debt_step(calib.b0, calib.r_n, g, calib.d, calib.s) - calib.b0


def corridor_layers(
    calib: Calibration,
    points: list[OperatingPoint] | None = None,
    extra_b: list[float] | None = None,
    eps_range: tuple[float, float] = (-0.02, 0.03),
    arrows: list[tuple[OperatingPoint, OperatingPoint]] | None = None,
) -> dict:
    """Plot layers for the corridor chart.

    Returns a dict with ``lines`` (frontier and any extra frontiers at other
    debt ratios), ``polygons`` (the error band), ``points`` and ``arrows``,
    all in percent so the plot reads like the tables.
    """
    front = baseline_frontier(calib)
    lo, hi = eps_range
    g_n = calib.g_n_star
    band = error_band_halfwidth(exact_step_error(calib.r_n, g_n, calib.b0))
    # vertical offset of a band whose perpendicular half-width is `band`
    dv = band * SQRT2

    def seg(intercept: float) -> list[tuple[float, float]]:
        return [(100 * lo, 100 * (intercept - lo)), (100 * hi, 100 * (intercept - hi))]

    lines = [{"label": f"frontier b={100 * calib.b0:.0f}%", "xy": seg(front.intercept), "style": "solid"}]
    for b in extra_b or []:
        f = frontier(calib.pi, calib.d, calib.s, b)
        lines.append({"label": f"frontier b={100 * b:.0f}%", "xy": seg(f.intercept), "style": "dashed"})
    upper = seg(front.intercept + dv)
    lower = seg(front.intercept - dv)
    polygon = {"label": "linearization band", "xy": upper + lower[::-1]}
    pts = [
        {"label": p.label, "xy": (100 * p.eps, 100 * p.g_n_star)}
        for p in (points or [baseline_point(calib)])
    ]
    arr = [
        {"from": (100 * a.eps, 100 * a.g_n_star), "to": (100 * z.eps, 100 * z.g_n_star), "label": z.label}
        for a, z in (arrows or [])
    ]
    return {
        "title": "Debt sustainability corridor",
        "xlabel": "repression bias (%)",
        "ylabel": "structural nominal growth (%)",
        "lines": lines,
        "polygons": [polygon],
        "points": pts,
        "arrows": arr,
    }
