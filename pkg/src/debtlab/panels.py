"""Sensitivity grids around the baseline calibration.

Every panel returns plain rows in internal decimal units; the emitters in
:mod:`debtlab.tables` turn them into percent displays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core_model import Calibration, nominal_growth
from .corridor import (
    OperatingPoint,
    baseline_frontier,
    corridor_width,
    debt_change,
    epsilon_star,
    g_star_min,
)
from .presets import AGGRESSIVE_ALT, MODERATE
from .scenarios import (
    FixedInflation,
    IoerDeficit,
    PassThrough,
    beta_critical,
    run_scenario,
    year_one_accumulation,
)

# table inputs, in the units they are quoted in (alpha, beta, gamma in %)
ALPHA_GRID = (0.013, 0.020, 0.033, 0.050)
EPS_GRID = (0.00, 0.25, 0.50, 0.75, 1.00, 1.50, 2.00)
GSTAR_GRID = (1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5)
BETA_GRID = (0.001, 0.002, 0.005, 0.010)
EBAR_GRID = (5.0, 10.0, 15.0, 20.0)
DEPRECIATIONS = {"D15": 15.0, "D20": 20.0}
GAMMA_GRID = (-0.010, -0.020, -0.033, -0.050)
APPRECIATIONS = (10.0, 20.0, 33.0, 50.0)

# tighter GDP denominator used for the aggressive column of the alpha panel
TIGHT_GDP = 600.0


@dataclass(frozen=True)
class AlphaRow:
    alpha: float
    g_moderate: float
    g_aggressive: float
    db_status_quo: float
    db_moderate: float
    db_aggressive: float

    @property
    def trap(self) -> bool:
        return self.db_moderate > 0


def panel_alpha(calib: Calibration) -> list[AlphaRow]:
    """One-year debt change under each scenario as the yen elasticity varies.

    Inflation stays at its base value so only growth moves.
    """
    aggressive = AGGRESSIVE_ALT.with_(pi_mode=FixedInflation(), deficit_mode=IoerDeficit(1.0, TIGHT_GDP))
    rows = []
    for a_pct in ALPHA_GRID:
        c = calib.with_(alpha=a_pct / 100.0)
        de_b = float(MODERATE.delta_e_path)
        de_c = float(aggressive.delta_e_path)
        rows.append(
            AlphaRow(
                alpha=c.alpha,
                g_moderate=nominal_growth(c.g_n_star, c.alpha, c.beta, c.e_bar, de_b),
                g_aggressive=nominal_growth(c.g_n_star, c.alpha, c.beta, c.e_bar, de_c),
                db_status_quo=debt_change(c),
                db_moderate=year_one_accumulation(MODERATE, c),
                db_aggressive=year_one_accumulation(aggressive, c),
            )
        )
    return rows


@dataclass(frozen=True)
class EpsRow:
    eps: float
    r_n: float
    db: float
    width: float
    boundary: bool = False

    @property
    def verdict(self) -> str:
        if self.boundary:
            return "Boundary"
        return "Yes" if self.db <= 0 else "No"


def panel_eps(calib: Calibration) -> list[EpsRow]:
    front = baseline_frontier(calib)
    e_star = epsilon_star(calib.pi, calib.d, calib.s, calib.b0, calib.g_n_star)
    grid = sorted({e / 100.0 for e in EPS_GRID} | {e_star})
    rows = []
    for eps in grid:
        c = calib.with_(r_n=calib.pi - eps)
        rows.append(
            EpsRow(
                eps=eps,
                r_n=c.r_n,
                db=debt_change(c),
                width=corridor_width(OperatingPoint(eps, calib.g_n_star), front),
                boundary=eps == e_star,
            )
        )
    return rows


@dataclass(frozen=True)
class GrowthRow:
    g_n_star: float
    spread: float
    db_status_quo: float
    width: float
    db_moderate: float
    boundary: bool = False

    @property
    def verdict(self) -> str:
        if self.boundary:
            return "Boundary"
        return "Yes" if self.db_status_quo <= 0 else "No"


def panel_growth(calib: Calibration) -> list[GrowthRow]:
    front = baseline_frontier(calib)
    g_min = g_star_min(calib.pi, calib.d, calib.s, calib.b0, calib.eps)
    grid = sorted({g / 100.0 for g in GSTAR_GRID} | {g_min})
    rows = []
    for g in grid:
        c = calib.with_(g_n_star=g)
        rows.append(
            GrowthRow(
                g_n_star=g,
                spread=c.r_n - g,
                db_status_quo=debt_change(c),
                width=corridor_width(OperatingPoint(calib.eps, g), front),
                db_moderate=year_one_accumulation(MODERATE, c),
                boundary=g == g_min,
            )
        )
    return rows


@dataclass(frozen=True)
class PenaltyCell:
    scenario: str
    delta_e: float
    beta: float
    e_bar: float
    db: float

    @property
    def trap(self) -> bool:
        return self.db > 0


def panel_penalty(calib: Calibration) -> list[PenaltyCell]:
    """Depreciation scenarios over the (beta, e_bar) grid; beta quoted in %/yen^2."""
    cells = []
    for name, de in DEPRECIATIONS.items():
        for beta_pct in BETA_GRID:
            for e_bar in EBAR_GRID:
                c = calib.with_(beta=beta_pct / 100.0, e_bar=e_bar)
                cells.append(PenaltyCell(name, de, c.beta, e_bar, debt_change(c, delta_e=de)))
    return cells


def critical_penalties(calib: Calibration, delta_e: float = 20.0) -> dict[float, float | None]:
    """Critical beta (internal units) per threshold for a depreciation of ``delta_e``."""
    g_base = calib.g_n_star + calib.alpha * delta_e
    g_min = calib.r_n + (calib.d - calib.s) / calib.b0
    return {e: beta_critical(g_base, g_min, delta_e, e) for e in EBAR_GRID}


@dataclass(frozen=True)
class PassThroughCell:
    gamma: float
    appreciation: float
    b_final: float
    path: tuple[float, ...]
    b0: float

    @property
    def trap(self) -> bool:
        return self.b_final > self.b0


def panel_passthrough(calib: Calibration) -> list[PassThroughCell]:
    cells = []
    for gamma_pct in GAMMA_GRID:
        for app in APPRECIATIONS:
            spec = AGGRESSIVE_ALT.with_(delta_e_path=-app, pi_mode=PassThrough(gamma_pct / 100.0))
            traj = run_scenario(spec, calib)
            cells.append(PassThroughCell(gamma_pct / 100.0, app, traj.final.b, tuple(traj.b), calib.b0))
    return cells


def sensitivity_panels(calib: Calibration) -> dict[str, list]:
    return {
        "A": panel_alpha(calib),
        "B": panel_eps(calib),
        "C": panel_growth(calib),
        "D": panel_penalty(calib),
        "E": panel_passthrough(calib),
    }


def gamma_rows_identical(cells: list[PassThroughCell]) -> bool:
    """True when every gamma row carries bit-identical paths per appreciation column."""
    by_col: dict[float, list[tuple[float, ...]]] = {}
    for c in cells:
        by_col.setdefault(c.appreciation, []).append(c.path)
    return all(
        all(np.array_equal(np.array(p), np.array(paths[0])) for p in paths) for paths in by_col.values()
    )
