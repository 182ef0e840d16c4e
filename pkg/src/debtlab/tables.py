"""Model tables as :class:`~debtlab.data_io.emit.Table` objects.

Rows carry decimals; ``values`` carries the same numbers in display units
(percent, percentage points) under the keys used by :mod:`debtlab.goldens`.
"""

from __future__ import annotations

from . import presets
from .core_model import BASELINE, Calibration, exact_step_error
from .corridor import OperatingPoint, epsilon_star_exact, read_corridor
from .data_io.emit import FORMATS, Table
from .panels import (
    critical_penalties,
    gamma_rows_identical,
    panel_alpha,
    panel_eps,
    panel_growth,
    panel_passthrough,
    panel_penalty,
)
from .scenarios import (
    Trajectory,
    fan_chart,
    gap_half_life,
    ioer_sweep,
    run_scenario,
    steady_state_debt,
    year_one_accumulation,
)

PP = 100.0


def dynamics_label(db: float, step: int) -> str:
    """Verbal reading of a one-year debt change (decimal share of GDP)."""
    if step == 0:
        return "Base"
    if db < -0.005:
        return "Decline"
    if db < 0.005:
        return "Near-Neutral"
    if db < 0.05:
        return "Increase"
    return "Rapid Accumulation" if step <= 2 else "Severe Accumulation"


def scenario_table(traj: Trajectory, key: str, title: str, detail: bool = False) -> Table:
    """Year-by-year path; ``detail`` adds inflation, bias and yen columns."""
    base = traj.states[0]
    cols = ["Year", "Rate hike", "r_n (%)", "g_n (%)", "r-g (%)", "d (%)", "b (%)", "Dynamics"]
    fmts = ["f0", "spct1", "pct1", "pct1", "spct1", "pct2", "pct1", "str"]
    if detail:
        cols[3:3] = ["pi (%)", "eps (%)", "de (JPY/USD)"]
        fmts[3:3] = ["pct2", "spct2", "f0"]
    rows, values = [], {}
    prev = None
    for k, s in enumerate(traj.states):
        db = 0.0 if prev is None else s.b - prev
        row = [s.year, s.r_n - base.r_n, s.r_n, s.g_n, s.r_n - s.g_n, s.d, s.b, dynamics_label(db, k)]
        if detail:
            row[3:3] = [s.pi, s.pi - s.r_n, s.delta_e]
        rows.append(row)
        values[f"b_{s.year}"] = s.b * PP
        values[f"pi_{s.year}"] = s.pi * PP
        values[f"eps_{s.year}"] = (s.pi - s.r_n) * PP
        prev = s.b
    fin = traj.final
    values.update(r_n=fin.r_n * PP, g_n=fin.g_n * PP, d=fin.d * PP, spread=(fin.r_n - fin.g_n) * PP)
    return Table(key, title, cols, rows, fmts, values=values)


SCENARIO_TABLES = {
    "A": ("scenario_A", "Scenario A: status quo", False),
    "B": ("scenario_B", "Scenario B: moderate hike (+0.5%), IOER-adjusted deficit", False),
    "C": ("scenario_C", "Scenario C: aggressive hike (+1.5%), IOER-adjusted deficit", False),
    "C-ALT": ("scenario_C_alt", "Scenario C-ALT: +1.5% hike with pass-through disinflation", False),
    "STRESS": ("scenario_stress", "Stress test: imposed disinflation path, 3.5% deficit", True),
}


def named_scenario_table(name: str, calib: Calibration = BASELINE, spec=None) -> Table:
    spec = spec or presets.get_scenario(name)
    key, title, detail = SCENARIO_TABLES.get(name, (f"scenario_{name}", f"Scenario {name}", True))
    if spec.description and name not in SCENARIO_TABLES:
        title = f"Scenario {name}: {spec.description}"
    return scenario_table(run_scenario(spec, calib), key, title, detail)


def c_alt_detail_table(calib: Calibration = BASELINE) -> Table:
    t = scenario_table(run_scenario(presets.AGGRESSIVE_ALT, calib), "c_alt_detail",
                       "Scenario C-ALT in full: inflation, bias and yen path", detail=True)
    t.notes.append("deficit held at the rounded 3.39% of GDP in every shock year")
    return t


# --- ratchet ---------------------------------------------------------------

def ratchet_table(calib: Calibration = BASELINE, years=(2028, 2029, 2040)) -> Table:
    r = presets.ratchet(2, calib)
    rows = [[y, r.baseline.b_at(y), r.shocked.b_at(y), r.gap_at(y)] for y in years]
    values = {}
    for y in years:
        values[f"base_{y}"] = r.baseline.b_at(y) * PP
        values[f"shock_{y}"] = r.shocked.b_at(y) * PP
    return Table(
        "ratchet_levels",
        "Ratchet: 2-year moderate-hike shock, then full reversion to the status quo",
        ["Year", "Status quo b (%)", "Shock then revert b (%)", "Gap (pp)"],
        rows,
        ["f0", "pct1", "pct1", "spct2"],
        notes=["shock years use the deficit rounded to 2.46% of GDP"],
        values=values,
    )


def ratchet_gap_table(calib: Calibration = BASELINE, check_year: int = 2035) -> Table:
    """Gap paths for 2- and 5-year shocks and the exact post-shock decay check."""
    runs = {n: presets.ratchet(n, calib) for n in (2, 5)}
    years = runs[2].baseline.years
    rows = [[y] + [runs[n].gap_at(y) for n in (2, 5)] for y in years]
    worst = 0.0
    for res in runs.values():
        g = res.gap
        for t in range(res.shock_len + 1, len(g)):
            worst = max(worst, abs(g[t] - res.decay_factor * g[t - 1]))
    spread = calib.r_n - calib.g_n_star
    values = {
        "gap2035_R2": runs[2].gap_at(check_year) * PP,
        "gap2035_R5": runs[5].gap_at(check_year) * PP,
        "decay_exact": bool(worst <= 1e-12),
        "decay_max_dev": worst,
        "half_life": gap_half_life(spread),
    }
    return Table(
        "ratchet_gaps",
        "Ratchet gaps after 2- and 5-year shocks",
        ["Year", "Gap, 2-yr shock (pp)", "Gap, 5-yr shock (pp)"],
        rows,
        ["f0", "spct2", "spct2"],
        notes=[f"post-shock gap factor per year {1 + spread:.4f}; half-life {values['half_life']:.1f} years"],
        values=values,
    )


# --- sweep and fan ---------------------------------------------------------

def sweep_table(calib: Calibration = BASELINE) -> Table:
    base = run_scenario(presets.STATUS_QUO, calib)
    rows_ = ioer_sweep(calib, presets.SWEEP_BASE, presets.SWEEP_ALPHAS, reference=base)
    rows = [[r.alpha_pt, r.d, r.b_final, r.gap_vs_baseline, r.trap] for r in rows_]
    rows.append(["Scenario A", calib.d, base.final.b, None, None])
    values = {}
    for r in rows_:
        k = int(round(r.alpha_pt * 100))
        values[f"d_{k}"] = r.d * PP
        values[f"b2030_{k}"] = r.b_final * PP
        values[f"gap_{k}"] = r.gap_vs_baseline * PP
        values[f"trap_{k}"] = r.trap
    values["spread"] = (rows_[-1].b_final - rows_[0].b_final) * PP
    values["b2030_A"] = base.final.b * PP
    return Table(
        "ioer_sweep",
        "IOER pass-through sweep: +1.5% hike, yen appreciates 20/yr",
        ["IOER share", "d (%)", "b 2030 (%)", "Gap vs A (pp)", "Trap"],
        rows,
        ["f2", "pct2", "pct1", "spct1", "yesno"],
        values=values,
    )


_FAN_KEYS = ("A_eps", "A_gstar", "B_eps", "B_gstar", "CALT_alpha", "CALT_gstar")


def fan_table(calib: Calibration = BASELINE) -> Table:
    fr = fan_chart(calib, presets.fan_perturbations(calib))
    rows, values = [], {}
    for key, r in zip(_FAN_KEYS, fr):
        low, mid, high = r.b_final
        rows.append([r.scenario, r.label, low, mid, high, r.range])
        for tag, v in zip(("low", "base", "high"), r.b_final):
            values[f"{key}_{tag}"] = v * PP
    return Table(
        "fan_chart",
        "Fan chart: 2030 debt ratio under one-SD parameter bands",
        ["Scenario", "Parameter", "Unfavorable (%)", "Base (%)", "Favorable (%)", "Range (pp)"],
        rows,
        ["str", "str", "pct1", "pct1", "pct1", "pct1"],
        values=values,
    )


# --- closed forms ----------------------------------------------------------

def closed_forms_table(calib: Calibration = BASELINE) -> Table:
    reading = read_corridor(calib)
    spread = calib.r_n - calib.g_n_star
    step_err = exact_step_error(calib.r_n, calib.g_n_star, calib.b0)
    # required bias at g* = 2.5% by the linear frontier
    eps_at_25 = reading.intercept - 0.025
    eps_exact = epsilon_star_exact(calib.pi, calib.d, calib.s, calib.b0, calib.g_n_star)
    eps_exact_25 = epsilon_star_exact(calib.pi, calib.d, calib.s, calib.b0, 0.025)
    b_plus = year_one_accumulation(presets.MODERATE_PLUS, calib)
    items = [
        ("Break-even repression bias", reading.epsilon_star, "pct4", "eps_star"),
        ("Minimum structural growth", reading.g_star_min, "pct4", "g_star_min"),
        ("Corridor width at baseline", reading.width, "pct4", "width"),
        ("Frontier intercept", reading.intercept, "pct4", "intercept"),
        ("Steady-state debt ratio", steady_state_debt(calib.d - calib.s, -spread), "pct1", "steady_state"),
        ("Gap half-life (years)", gap_half_life(spread), "f1", "half_life"),
        ("Linearization error (%/yr)", abs(step_err), "pct3", "approx_error"),
        ("Error-band halfwidth", reading.band, "pct3", "band"),
        ("Band verdict", reading.verdict, "str", "verdict"),
        ("Break-even bias, exact factor", eps_exact, "pct4", "eps_star_exact"),
        ("Bias needed at g* = 2.5%", eps_at_25, "pct4", "eps_at_g25"),
        ("Bias needed at g* = 2.5%, exact factor", eps_exact_25, "pct4", "eps_at_g25_exact"),
        ("B+ first-year accumulation", b_plus, "pct2", "b_plus_year1"),
    ]
    rows, values = [], {}
    for label, v, fmt, key in items:
        rows.append([label, v if isinstance(v, str) else FORMATS[fmt](v)])
        values[key] = v if isinstance(v, str) or fmt == "f1" else v * PP
    return Table(
        "closed_forms",
        "Closed-form corridor and stability quantities",
        ["Quantity", "Value"],
        rows,
        ["str", "str"],
        notes=["rates in percent; exact-factor rows use (1+r)/(1+g) in place of 1+r-g"],
        values=values,
    )


def corridor_table(calib: Calibration = BASELINE, point: OperatingPoint | None = None) -> Table:
    r = read_corridor(calib, point)
    p = point or OperatingPoint(calib.eps, calib.g_n_star)
    rows = [[p.eps, p.g_n_star, r.width, r.intercept, r.epsilon_star, r.g_star_min, r.band, r.verdict]]
    return Table(
        "corridor_reading",
        "Corridor reading",
        ["eps (%)", "g* (%)", "W (%)", "Intercept (%)", "eps* (%)", "g*min (%)", "Band (%)", "Verdict"],
        rows,
        ["pct3", "pct3", "spct3", "pct4", "pct4", "pct4", "pct3", "str"],
        values={"width": r.width * PP, "verdict": r.verdict, "band": r.band * PP},
    )


# --- sensitivity panels ----------------------------------------------------

def panel_a_table(calib: Calibration = BASELINE) -> Table:
    rows, values = [], {}
    for r in panel_alpha(calib):
        a = f"{r.alpha * 100:.3f}"
        rows.append([r.alpha * 100, r.g_moderate, r.g_aggressive, r.db_status_quo, r.db_moderate,
                     r.db_aggressive, r.trap])
        values.update({f"gB_{a}": r.g_moderate * PP, f"gC_{a}": r.g_aggressive * PP,
                       f"dbA_{a}": r.db_status_quo * PP, f"dbB_{a}": r.db_moderate * PP,
                       f"dbC_{a}": r.db_aggressive * PP})
    return Table(
        "sens_alpha",
        "Sensitivity A: yen elasticity of growth",
        ["alpha (%/yen)", "g B (%)", "g C (%)", "db A (pp)", "db B (pp)", "db C (pp)", "Trap"],
        rows,
        ["f3", "pct2", "pct2", "spct3", "spct2", "spct2", "yesno"],
        notes=["aggressive column: yen appreciates 20/yr, deficit on a JPY 600T GDP denominator"],
        values=values,
    )


def panel_b_table(calib: Calibration = BASELINE) -> Table:
    rows, values = [], {}
    for r in panel_eps(calib):
        rows.append([r.eps, r.r_n, r.db, r.width, r.verdict])
        if r.boundary:
            values["boundary_eps"] = r.eps * PP
            continue
        e = f"{r.eps * 100:.2f}"
        values.update({f"r_{e}": r.r_n * PP, f"db_{e}": r.db * PP, f"W_{e}": r.width * PP,
                       f"verdict_{e}": r.verdict})
    return Table(
        "sens_bias",
        "Sensitivity B: repression bias",
        ["eps (%)", "r_n (%)", "db (pp)", "W (%)", "Stable"],
        rows,
        ["pct3", "pct3", "spct3", "spct3", "str"],
        values=values,
    )


def panel_c_table(calib: Calibration = BASELINE) -> Table:
    rows, values = [], {}
    for r in panel_growth(calib):
        rows.append([r.g_n_star, r.spread, r.db_status_quo, r.width, r.verdict, r.db_moderate])
        if r.boundary:
            values["boundary_g"] = r.g_n_star * PP
            continue
        g = f"{r.g_n_star * 100:.1f}"
        values.update({f"spread_{g}": r.spread * PP, f"dbA_{g}": r.db_status_quo * PP,
                       f"W_{g}": r.width * PP, f"dbB_{g}": r.db_moderate * PP})
    return Table(
        "sens_growth",
        "Sensitivity C: structural nominal growth",
        ["g* (%)", "r-g (%)", "db A (pp)", "W (%)", "Stable", "db B (pp)"],
        rows,
        ["pct3", "spct2", "spct3", "spct3", "str", "spct2"],
        values=values,
    )


def panel_d_table(calib: Calibration = BASELINE) -> Table:
    cells = panel_penalty(calib)
    rows, values = [], {}
    for sc in ("D15", "D20"):
        for beta in sorted({c.beta for c in cells}):
            row_cells = [c for c in cells if c.scenario == sc and c.beta == beta]
            row = [sc, beta * 100]
            for c in row_cells:
                row.append(f"{c.db * PP:+.3f}" + ("*" if c.trap else ""))
                values[f"{sc}_{beta * 100:.3f}_{c.e_bar:g}"] = c.db * PP
            rows.append(row)
    crit = critical_penalties(calib)
    for e, b in crit.items():
        values[f"beta_crit_{e:g}"] = float("nan") if b is None else b * 100
    values["trap_count"] = float(sum(c.trap for c in cells))
    ebars = sorted({c.e_bar for c in cells})
    crit_txt = ", ".join(f"e_bar {e:g}: {'none' if b is None else f'{b * 100:.4f}'}" for e, b in crit.items())
    return Table(
        "sens_penalty",
        "Sensitivity D: depreciation penalty, one-year db (pp); * marks debt growth",
        ["Depreciation", "beta (%/yen^2)"] + [f"e_bar {e:g}" for e in ebars],
        rows,
        ["str", "f3"] + ["str"] * len(ebars),
        notes=[f"critical beta for a 20-yen depreciation: {crit_txt}"],
        values=values,
    )


def panel_e_table(calib: Calibration = BASELINE) -> Table:
    cells = panel_passthrough(calib)
    apps = sorted({c.appreciation for c in cells})
    rows, values = [], {}
    for gamma in sorted({c.gamma for c in cells}, reverse=True):
        row = [f"{gamma * 100:.3f}"]
        for c in (c for c in cells if c.gamma == gamma):
            row.append(f"{c.b_final * PP:.1f}" + ("*" if c.trap else ""))
            values[f"b2030_{-gamma * 100:.3f}_{c.appreciation:g}"] = c.b_final * PP
        rows.append(row)
    values["gamma_rows_identical"] = gamma_rows_identical(cells)
    values["trap_count"] = float(sum(c.trap for c in cells))
    return Table(
        "sens_passthrough",
        "Sensitivity E: pass-through and appreciation, 2030 debt ratio (%); * marks b above base",
        ["gamma (%/yen)"] + [f"app. {a:g}/yr" for a in apps],
        rows,
        ["str"] * (1 + len(apps)),
        notes=["deficit held at 3.39% of GDP; debt paths do not depend on inflation"],
        values=values,
    )


def model_tables(calib: Calibration = BASELINE) -> list[Table]:
    """Every model table in manifest order."""
    return [
        ratchet_table(calib),
        *(named_scenario_table(n, calib) for n in ("A", "B", "C", "C-ALT")),
        sweep_table(calib),
        fan_table(calib),
        c_alt_detail_table(calib),
        panel_a_table(calib),
        panel_b_table(calib),
        panel_c_table(calib),
        panel_d_table(calib),
        panel_e_table(calib),
        named_scenario_table("STRESS", calib),
        ratchet_gap_table(calib),
        closed_forms_table(calib),
        corridor_table(calib),
    ]
