"""Plot layers for the model figures, in percent, ready for the SVG emitter."""

from __future__ import annotations

from . import presets
from .core_model import BASELINE, Calibration
from .corridor import OperatingPoint, baseline_point, corridor_layers
from .scenarios import Trajectory, fan_chart, ioer_sweep, run_scenario


def trajectory_layers(trajs: list[Trajectory], title: str = "Debt ratio paths") -> dict:
    return {
        "title": title,
        "xlabel": "year",
        "ylabel": "debt / GDP (%)",
        "lines": [{"label": t.name, "xy": [(y, 100 * b) for y, b in zip(t.years, t.b)]} for t in trajs],
    }


def scenario_figure(calib: Calibration = BASELINE) -> dict:
    names = ("A", "B", "C", "C-ALT", "STRESS")
    return trajectory_layers([run_scenario(presets.get_scenario(n), calib) for n in names],
                             "Debt ratio by scenario, 2026-2030")


def ratchet_figure(calib: Calibration = BASELINE) -> dict:
    lines = []
    for n in (2, 5):
        r = presets.ratchet(n, calib)
        lines.append({"label": f"{n}-yr shock", "xy": [(y, 100 * g) for y, g in zip(r.baseline.years, r.gap)]})
    return {"title": "Debt gap after a temporary shock", "xlabel": "year", "ylabel": "gap vs status quo (pp)",
            "lines": lines}


def sweep_figure(calib: Calibration = BASELINE) -> dict:
    rows = ioer_sweep(calib, presets.SWEEP_BASE, presets.SWEEP_ALPHAS)
    return {
        "title": "2030 debt ratio by IOER pass-through share",
        "xlabel": "IOER share",
        "ylabel": "debt / GDP 2030 (%)",
        "bars": [{"label": f"{r.alpha_pt:.2f}", "value": round(100 * r.b_final, 6)} for r in rows],
    }


def fan_figure(calib: Calibration = BASELINE) -> dict:
    rows = fan_chart(calib, presets.fan_perturbations(calib))
    return {
        "title": "Range of 2030 debt ratio across one-SD bands",
        "xlabel": "scenario and parameter",
        "ylabel": "range (pp)",
        "bars": [{"label": f"{r.scenario} {r.label.split()[0]}", "value": round(100 * r.range, 6)} for r in rows],
    }


def corridor_figure(calib: Calibration = BASELINE) -> dict:
    """Baseline point, the +0.5% hike move and frontiers at two other debt ratios."""
    base = baseline_point(calib)
    hiked = OperatingPoint(base.eps - 0.005, base.g_n_star - 0.005, "B")
    return corridor_layers(calib, points=[base, hiked], extra_b=[1.5, 3.0], arrows=[(base, hiked)])


FIGURES = {
    "fig_scenarios": scenario_figure,
    "fig_ratchet": ratchet_figure,
    "fig_ioer_sweep": sweep_figure,
    "fig_fan_chart": fan_figure,
    "fig_corridor": corridor_figure,
}
