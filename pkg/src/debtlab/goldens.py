"""Published reference values and the comparison rule applied to them.

Values are in display units (percent, percentage points, raw statistics)
exactly as printed. Each check names the table value it reads, the
expected figure, an absolute tolerance and, where the published figure is
rounded, the number of decimals the computed value is rounded to first.

``CORE`` holds model-table checks, which depend only on the calibration.
``CONTINGENT`` holds econometric checks, which depend on the archived
data snapshot and are only compared when the catalog vintage matches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

CONTINGENT_VINTAGE = "2026-03"


@dataclass(frozen=True)
class Golden:
    key: str
    expected: float | str | bool
    tol: float = 0.0
    digits: int | None = None


@dataclass(frozen=True)
class Check:
    artifact: str
    key: str
    expected: float | str | bool
    actual: float | str | bool | None
    passed: bool

    def describe(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.artifact}:{self.key} expected={self.expected} actual={_show(self.actual)}"


def _show(v) -> str:
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def matches(g: Golden, actual) -> bool:
    if actual is None:
        return False
    if isinstance(g.expected, (bool, str)):
        return actual == g.expected
    a = float(actual)
    if not math.isfinite(a):
        return False
    if g.digits is not None:
        a = round(a, g.digits)
    return abs(a - g.expected) <= g.tol + 1e-9


def compare(artifact: str, values: dict, goldens: list[Golden]) -> list[Check]:
    return [Check(artifact, g.key, g.expected, values.get(g.key), matches(g, values.get(g.key))) for g in goldens]


def _series(prefix: str, labels, expected, tol: float = 0.0, digits: int | None = None) -> list[Golden]:
    return [Golden(f"{prefix}{lab}", e, tol, digits) for lab, e in zip(labels, expected)]


YEARS = (2026, 2027, 2028, 2029, 2030)


def _path(expected, tol=0.05, digits=1) -> list[Golden]:
    return _series("b_", YEARS, expected, tol, digits)


# --- model tables ------------------------------------------------------------

CORE: dict[str, list[Golden]] = {
    "ratchet_levels": [
        Golden("base_2028", 240.2, 0.05, 1),
        Golden("base_2029", 240.3, 0.05, 1),
        Golden("base_2040", 241.1, 0.05, 1),
        Golden("shock_2028", 246.0, 0.05, 1),
        Golden("shock_2029", 246.0, 0.05, 1),
        Golden("shock_2040", 246.3, 0.05, 1),
    ],
    "scenario_A": _path((240.0, 240.1, 240.2, 240.2, 240.3)) + [
        Golden("r_n", 2.2, 0.05, 1), Golden("g_n", 3.0, 0.05, 1), Golden("d", 2.0, 0.005, 2),
    ],
    "scenario_B": _path((240.0, 243.0, 246.0, 248.9, 251.9)) + [
        Golden("r_n", 2.7, 0.05, 1), Golden("g_n", 2.5, 0.05, 1), Golden("d", 2.46, 0.005, 2),
    ],
    "scenario_C": _path((240.0, 251.1, 262.5, 274.3, 286.4)) + [
        Golden("r_n", 3.7, 0.05, 1), Golden("g_n", 0.5, 0.05, 1), Golden("d", 3.39, 0.005, 2),
    ],
    "scenario_C_alt": _path((240.0, 247.5, 255.1, 262.8, 270.7)) + [
        Golden("r_n", 3.7, 0.05, 1), Golden("g_n", 2.0, 0.05, 1),
    ],
    "c_alt_detail": _series("pi_", YEARS, (2.70, 3.10, 3.50, 3.90, 4.30), 0.005, 2)
    + _series("eps_", YEARS, (0.50, -0.60, -0.20, 0.20, 0.60), 0.005, 2)
    + [Golden("spread", 1.70, 0.005, 2), Golden("d", 3.39, 0.005, 2)],
    "scenario_stress": _path((240.0, 251.2, 262.7, 274.6, 286.9))
    + _series("pi_", YEARS, (2.7, 1.5, 1.0, 0.5, 0.0), 0.05, 1)
    + _series("eps_", YEARS, (0.50, -2.20, -2.70, -3.20, -3.70), 0.005, 2),
    "ioer_sweep": _series("d_", (0, 25, 50, 75, 100), (2.00, 2.35, 2.69, 3.04, 3.39), 0.005, 2)
    + _series("b2030_", (0, 25, 50, 75, 100), (265.0, 266.4, 267.8, 269.2, 270.6), 0.05, 1)
    + _series("gap_", (0, 25, 50, 75, 100), (24.6, 26.1, 27.5, 28.9, 30.3), 0.05, 1)
    + _series("trap_", (0, 25, 50, 75, 100), (True,) * 5)
    + [Golden("spread", 5.7, 0.05, 1), Golden("b2030_A", 240.3, 0.05, 1)],
    "fan_chart": [
        Golden(f"{row}_{k}", v, 0.1)
        for row, vals in {
            "A_eps": (242.7, 240.3, 238.0),
            "A_gstar": (245.1, 240.3, 235.6),
            "B_eps": (254.3, 251.8, 249.4),
            "B_gstar": (256.7, 251.8, 246.9),
            "CALT_alpha": (270.7, 270.7, 263.1),
            "CALT_gstar": (275.8, 270.7, 265.5),
        }.items()
        for k, v in zip(("low", "base", "high"), vals)
    ],
    "ratchet_gaps": [
        Golden("gap2035_R2", 5.4, 0.1),
        Golden("gap2035_R5", 13.9, 0.1),
        Golden("decay_exact", True),
        Golden("half_life", 86.3, 0.05, 1),
    ],
    "closed_forms": [
        Golden("eps_star", 0.5333, 0.00005, 4),
        Golden("g_star_min", 3.0333, 0.00005, 4),
        Golden("width", -0.0236, 0.00005, 4),
        Golden("intercept", 3.5333, 0.00005, 4),
        Golden("steady_state", 250.0, 1e-9),
        Golden("half_life", 86.3, 0.05, 1),
        Golden("approx_error", 0.056, 0.0005, 3),
        Golden("band", 0.040, 0.0005, 3),
        Golden("verdict", "within error band"),
        Golden("b_plus_year1", 8.21, 0.01),
    ],
    "sens_alpha": [
        Golden(f"{col}_{a}", v, tol)
        for a, g_b, g_c, db_b, db_c in (
            ("0.013", 2.87, 2.74, 2.05, 5.85),
            ("0.020", 2.80, 2.60, 2.22, 6.19),
            ("0.033", 2.67, 2.34, 2.53, 6.81),
            ("0.050", 2.50, 2.00, 2.94, 7.63),
        )
        for col, v, tol in (("gB", g_b, 0.005), ("gC", g_c, 0.005), ("dbA", 0.080, 0.01),
                            ("dbB", db_b, 0.01), ("dbC", db_c, 0.01))
    ],
    "sens_bias": [
        Golden(f"{col}_{e}", v, 0.01)
        for e, r, db, w in (
            ("0.00", 2.70, 1.280, -0.377),
            ("0.25", 2.45, 0.680, -0.200),
            ("0.50", 2.20, 0.080, -0.024),
            ("0.75", 1.95, -0.520, 0.153),
            ("1.00", 1.70, -1.120, 0.330),
            ("1.50", 1.20, -2.320, 0.684),
            ("2.00", 0.70, -3.520, 1.037),
        )
        for col, v in (("r", r), ("db", db), ("W", w))
    ]
    + [Golden("boundary_eps", 0.533, 0.0005, 3), Golden("verdict_0.75", "Yes"), Golden("verdict_0.50", "No")],
    "sens_growth": [
        Golden(f"{col}_{g}", v, 0.01)
        for g, spread, db_a, w, db_b in (
            ("1.0", 1.20, 4.88, -1.44, 7.74),
            ("1.5", 0.70, 3.68, -1.08, 6.54),
            ("2.0", 0.20, 2.48, -0.73, 5.34),
            ("2.5", -0.30, 1.28, -0.38, 4.14),
            ("3.0", -0.80, 0.08, -0.024, 2.94),
            ("3.5", -1.30, -1.12, 0.33, 1.74),
            ("4.0", -1.80, -2.32, 0.68, 0.54),
            ("4.5", -2.30, -3.52, 1.04, -0.66),
        )
        for col, v in (("spread", spread), ("dbA", db_a), ("W", w), ("dbB", db_b))
    ]
    + [Golden("boundary_g", 3.033, 0.0005, 3)],
    "sens_penalty": [
        Golden(f"{sc}_{beta}_{eb}", v, 0.01)
        for sc, grid in {
            "D15": {
                "0.001": (-1.480, -1.660, -1.720, -1.720),
                "0.002": (-1.240, -1.600, -1.720, -1.720),
                "0.005": (-0.520, -1.420, -1.720, -1.720),
                "0.010": (0.680, -1.120, -1.720, -1.720),
            },
            "D20": {
                "0.001": (-1.780, -2.080, -2.260, -2.320),
                "0.002": (-1.240, -1.840, -2.200, -2.320),
                "0.005": (0.380, -1.120, -2.020, -2.320),
                "0.010": (3.080, 0.080, -1.720, -2.320),
            },
        }.items()
        for beta, row in grid.items()
        for eb, v in zip(("5", "10", "15", "20"), row)
    ]
    + [
        Golden("beta_crit_5", 0.0043, 1e-4),
        Golden("beta_crit_10", 0.0097, 1e-4),
        Golden("beta_crit_15", 0.0387, 1e-4),
        Golden("trap_count", 4.0),
    ],
    "sens_passthrough": [
        Golden(f"b2030_{g}_{a}", v, 0.1)
        for g in ("0.010", "0.020", "0.033", "0.050")
        for a, v in zip(("10", "20", "33", "50"), (265.6, 270.7, 277.5, 286.5))
    ]
    + [Golden("gamma_rows_identical", True), Golden("trap_count", 16.0)],
}


# --- econometric tables (contingent on the archived snapshot) ----------------

CONTINGENT: dict[str, list[Golden]] = {
    "subsample_means": [
        Golden(f"{col}_{var}", v, 0.01)
        for var, pre_m, pre_sd, post_m, post_sd, diff, p in (
            ("r_n", 2.27, 1.53, 0.27, 0.33, -2.00, 0.000),
            ("pi", 0.25, 1.08, 1.16, 1.28, 0.92, 0.049),
            ("eps", -2.03, 1.01, 0.89, 1.09, 2.92, 0.000),
            ("g_n", -0.15, 2.17, 1.93, 2.12, 2.08, 0.016),
            ("rg", 1.80, 1.98, -1.65, 1.97, -3.45, 0.000),
            ("db", 7.80, 4.37, 1.26, 8.20, -6.53, 0.028),
            ("de", -2.61, 9.77, 5.97, 9.74, 8.58, 0.023),
        )
        for col, v in (("pre_mean", pre_m), ("pre_sd", pre_sd), ("post_mean", post_m),
                       ("post_sd", post_sd), ("diff", diff), ("p", p))
    ],
    "chow_break": [
        Golden("F", 5.55, 0.05),
        Golden("p", 0.010, 0.005),
        Golden("beta_full", 2.218, 0.01),
        Golden("se_full", 0.279, 0.01),
        Golden("r2_full", 0.701, 0.01),
        Golden("beta_pre", 1.621, 0.01),
        Golden("beta_post", 3.686, 0.01),
        Golden("nobs", 29.0),
    ],
    "var_irf": [
        Golden("const_db", 4.179, 0.01),
        Golden("se_const_db", 0.344, 0.01),
        Golden("cum_eps", -8.62, 0.01),
        Golden("cum_rg", 8.07, 0.01),
        Golden("adf_eps", -1.90, 0.01),
        Golden("adf_p_eps", 0.331, 0.01),
        Golden("adf_rg", -1.62, 0.01),
        Golden("adf_p_rg", 0.473, 0.01),
        Golden("adf_db", -3.50, 0.01),
        Golden("adf_p_db", 0.008, 0.01),
        Golden("nobs", 29.0),
    ],
    "var_fevd": [
        Golden(f"{row}_{col}", v, 0.005)
        for row, vals in {
            "db": (0.275, 0.465, 0.259),
            "eps": (0.810, 0.175, 0.015),
            "rg": (0.406, 0.525, 0.068),
        }.items()
        for col, v in zip(("eps", "rg", "db"), vals)
    ],
    "ardl_bounds": [
        Golden("F", 1.684, 0.05),
        Golden("r2", 0.243, 0.01),
        Golden("nobs", 27.0),
        Golden("b_lag", -0.056, 0.01),
        Golden("eps_lag", -0.045, 0.01),
        Golden("rg_lag", 0.468, 0.01),
        Golden("db_lag", 0.032, 0.01),
        Golden("const", 15.439, 0.01),
        Golden("lr_eps", -0.793, 0.01),
        Golden("lr_rg", 8.333, 0.01),
    ],
    "local_projection": _series("eps_h", range(6), (0.74, -1.05, -2.49, -4.57, -6.82, -8.20), 0.01)
    + _series("se_eps_h", range(6), (1.05, 1.62, 1.86, 2.13, 1.18, 1.42), 0.01)
    + _series("rg_h", range(6), (2.40, 2.85, 3.18, 2.60, 2.67, 2.24), 0.01)
    + _series("se_rg_h", range(6), (0.53, 0.62, 0.79, 1.16, 0.91, 0.86), 0.01)
    + _series("n_h", range(6), (28.0, 27.0, 26.0, 25.0, 24.0, 23.0), 0.0),
    "yield_gap": [
        Golden("m1_r_global", 0.161, 0.01),
        Golden("m2_r_global", -0.474, 0.01),
        Golden("m2_phi", -2.143, 0.01),
        Golden("m2_se_phi", 0.624, 0.01),
        Golden("m3_r_global", -0.453, 0.01),
        Golden("m3_phi", -1.647, 0.01),
        Golden("m3_se_phi", 0.560, 0.01),
        Golden("m3_ycc", -1.093, 0.01),
        Golden("placebo_US_phi", 0.000, 0.01),
        Golden("placebo_DE_phi", -0.711, 0.01),
        Golden("placebo_DE_se_phi", 0.286, 0.01),
    ],
    "real_debt": _series("beta_h", range(6), (0.00, -0.42, 1.02, 1.11, 1.99, 5.49), 0.01)
    + _series("se_h", range(6), (0.00, 2.96, 5.11, 7.57, 8.58, 9.64), 0.01)
    + [Golden("episodes", "1996,1997,2001,2013,2015,2022"), Golden("confirmed", False)],
    "pass_through_bins": [
        Golden("free_de", -0.0091, 0.01),
        Golden("free_se", 0.0064, 0.01),
        Golden("free_n", 227.0),
        Golden("captive_de", 0.0263, 0.01),
        Golden("captive_se", 0.0121, 0.01),
        Golden("captive_n", 58.0),
        Golden("inter_de", -0.0097, 0.01),
        Golden("inter_de_x_captive", 0.0309, 0.01),
    ],
    "insulation": [
        Golden("pre_beta", -0.188, 0.01),
        Golden("pre_se", 0.474, 0.01),
        Golden("pre_n", 18.0),
        Golden("ycc_beta", -1.556, 0.01),
        Golden("ycc_se", 1.134, 0.01),
        Golden("ycc_n", 8.0),
        Golden("t", 1.11, 0.01),
        Golden("p", 0.265, 0.01),
    ],
    "placebo": [
        Golden(f"{col}_{c}", v, 0.01)
        for c, bf, sf, bc, p in (
            ("Japan", 1.867, 0.249, 0.400, 0.000),
            ("Germany", 1.050, 0.034, 1.198, 0.049),
            ("UK", 1.114, 0.060, 1.119, 0.969),
            ("France", 1.023, 0.131, 1.170, 0.228),
        )
        for col, v in (("free", bf), ("se_free", sf), ("captive", bc), ("p", p))
    ],
    "placebo_qe": [
        Golden(f"{col}_{c}", v, 0.01)
        for c, bc, p in (("Japan", 0.197, 0.000), ("Germany", 1.117, 0.568), ("UK", 1.183, 0.655), ("France", 1.008, 0.882))
        for col, v in (("captive", bc), ("p", p))
    ],
    "lstar": [
        Golden(f"{col}_{s}", v, tol)
        for s, n, gam, c, dr2 in (
            ("free", 227.0, 31.99, 0.62, 0.0082),
            ("captive", 58.0, 30.52, 3.48, 0.0524),
            ("full", 329.0, 0.27, -9.57, 0.0128),
        )
        for col, v, tol in (("n", n, 0.0), ("gamma", gam, 0.01), ("c", c, 0.01), ("dr2", dr2, 0.0001))
    ],
}
