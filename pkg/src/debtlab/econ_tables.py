"""Result tables for the empirical suite.

Cells combine estimate, standard error and significance stars as text;
``values`` keeps the raw numbers under the keys :mod:`debtlab.goldens`
compares. Every builder takes result objects so the rendering can be
tested without data.
"""

from __future__ import annotations

import math
from typing import Callable

from .data_io.catalog import SeriesCatalog, derive_series
from .data_io.emit import Table
from .econometrics import fair, suite
from .econometrics.regression import RegressionResult, stars

LABELS = {
    "r_n": "Nominal yield (%)",
    "pi": "CPI inflation (%)",
    "eps": "Repression bias (%)",
    "g_n": "Nominal growth (%)",
    "rg": "r - g spread (%)",
    "db": "Debt change (pp/yr)",
    "de": "Yen change (JPY/USD)",
}


def _f(v: float, digits: int = 3, signed: bool = False) -> str:
    if v is None or (isinstance(v, float) and not math.isfinite(v)):
        return "---"
    s = f"{v:+.{digits}f}" if signed else f"{v:.{digits}f}"
    return s.lstrip("+-") if s.lstrip("+-").strip("0.") == "" else s


def cell(est: float, se: float | None = None, p: float | None = None, digits: int = 3) -> str:
    """'est (se)' plus stars; '---' when the estimate is missing."""
    if est is None or not math.isfinite(est):
        return "---"
    out = _f(est, digits)
    if se is not None:
        out += f" ({_f(se, digits)})"
    if p is not None and math.isfinite(p):
        out += stars(p)
    return out


def _coef(res: RegressionResult, name: str, digits: int = 3) -> str:
    return cell(res.coef(name), res.stderr(name), res.pvalue(name), digits)


# --- subsample and structural-break tests ---------------------------------

def subsample_table(rows: list[suite.SubsampleRow]) -> Table:
    pre, post = suite.PRE_WINDOW, suite.POST_WINDOW
    out, values = [], {}
    for r in rows:
        out.append([
            LABELS.get(r.name, r.name), _f(r.pre_mean, 2), _f(r.pre_sd, 2), _f(r.post_mean, 2), _f(r.post_sd, 2),
            _f(r.test.diff, 2, True) + stars(r.test.p), _f(r.test.p, 3),
        ])
        values.update({
            f"pre_mean_{r.name}": r.pre_mean, f"pre_sd_{r.name}": r.pre_sd,
            f"post_mean_{r.name}": r.post_mean, f"post_sd_{r.name}": r.post_sd,
            f"diff_{r.name}": r.test.diff, f"p_{r.name}": r.test.p,
        })
    n_pre = rows[0].pre_n if rows else 0
    n_post = rows[0].post_n if rows else 0
    return Table(
        "subsample_means",
        f"Subsample means: {pre[0]}-{pre[1]} (N={n_pre}) vs {post[0]}-{post[1]} (N={n_post})",
        ["Variable", "Pre mean", "Pre SD", "Post mean", "Post SD", "Post-Pre", "p-value"],
        out,
        notes=["SD uses the sample (N-1) convention; Welch two-sided t test",
               "* p<0.10, ** p<0.05, *** p<0.01"],
        values=values,
    )


def chow_table(res) -> Table:
    cols = (res.pooled, res.first, res.second)
    rows = [
        ["Constant"] + [_coef(m, "const") for m in cols],
        ["Slope on r - g"] + [_coef(m, "rg") for m in cols],
        ["R-squared"] + [_f(m.rsquared, 3) for m in cols],
        ["N"] + [str(m.nobs) for m in cols],
    ]
    verdict = "reject no-break at 5%" if res.p < 0.05 else "no-break not rejected at 5%"
    values = {
        "F": res.F, "p": res.p, "nobs": float(res.pooled.nobs),
        "beta_full": res.pooled.coef("rg"), "se_full": res.pooled.stderr("rg"), "r2_full": res.pooled.rsquared,
        "beta_pre": res.first.coef("rg"), "beta_post": res.second.coef("rg"),
        "const_full": res.pooled.coef("const"), "const_pre": res.first.coef("const"),
        "const_post": res.second.coef("const"),
        "r2_pre": res.first.rsquared, "r2_post": res.second.rsquared,
        "n_pre": float(res.first.nobs), "n_post": float(res.second.nobs),
    }
    pre, post = suite.PRE_WINDOW, suite.POST_WINDOW
    return Table(
        "chow_break",
        f"Break test at {suite.BREAK_YEAR}: debt change on the r - g spread",
        ["Parameter", "Full sample", f"{pre[0]}-{pre[1]}", f"{post[0]}-{post[1]}"],
        rows,
        notes=[f"Chow F({res.df[0]},{res.df[1]}) = {res.F:.2f}, p = {res.p:.3f}: {verdict}",
               "classical standard errors in parentheses"],
        values=values,
    )


def var_table(block: suite.VarBlock) -> Table:
    fit = block.fit
    names = list(fit.names)
    rows = []
    for i, eq in enumerate(names):
        row = [LABELS.get(eq, eq), cell(fit.intercepts[i], fit.intercept_se[i])]
        row += [cell(fit.coefs[i, j], fit.coef_se[i, j]) for j in range(len(names))]
        rows.append(row)
    i_db = names.index("db")
    values = {
        "const_db": fit.intercepts[i_db],
        "se_const_db": fit.intercept_se[i_db],
        "cum_eps": block.cumulative_db("eps"),
        "cum_rg": block.cumulative_db("rg"),
        "nobs": float(fit.nobs),
    }
    adf_txt = []
    for n, a in block.adf.items():
        values[f"adf_{n}"] = a.statistic
        values[f"adf_p_{n}"] = a.pvalue
        adf_txt.append(f"{n} {a.statistic:.2f} (p={a.pvalue:.3f})")
    lo, hi = block.years
    span = suite.FEVD_HORIZON
    return Table(
        "var_irf",
        f"VAR(1), {lo}-{hi}, N={fit.nobs}: rows are equations, columns lagged regressors",
        ["Equation", "Constant"] + [f"{n}(t-1)" for n in names],
        rows,
        notes=[
            f"cumulative {span}-year debt-change response to a one-SD shock: "
            f"bias {values['cum_eps']:+.2f} pp, spread {values['cum_rg']:+.2f} pp",
            "ADF with one lag and constant: " + "; ".join(adf_txt),
        ],
        values=values,
    )


def fevd_table(block: suite.VarBlock) -> Table:
    names = list(block.fit.names)
    fevd = block.responses.fevd
    rows, values = [], {}
    for i, n in enumerate(names):
        rows.append([LABELS.get(n, n)] + [_f(fevd[i, j], 3) for j in range(len(names))] + [_f(fevd[i].sum(), 3)])
        for j, s in enumerate(names):
            values[f"{n}_{s}"] = fevd[i, j]
    return Table(
        "var_fevd",
        f"Forecast error variance shares at {block.responses.horizon} years (Cholesky order: bias, spread, debt)",
        ["Variable"] + [f"{s} shock" for s in names] + ["Total"],
        rows,
        values=values,
    )


def ardl_table(res) -> Table:
    ecm = res.ecm
    labels = {"b_lag": "Debt level (t-1)", "eps_lag": "Bias (t-1)", "rg_lag": "Spread (t-1)",
              "db_lag": "Debt change (t-1)", "const": "Constant"}
    rows = [[labels[n], _coef(ecm, n)] for n in ("b_lag", "eps_lag", "rg_lag", "db_lag", "const")]
    for lr in res.long_run:
        tag = "" if lr.identified else " (not identified)"
        rows.append([f"Long-run {labels[lr.name].split(' (')[0].lower()}{tag}", cell(lr.value, lr.se)])
    values = {n: ecm.coef(n) for n in ("b_lag", "eps_lag", "rg_lag", "db_lag", "const")}
    values.update({"F": res.F, "r2": ecm.rsquared, "nobs": float(ecm.nobs)})
    for lr in res.long_run:
        values[{"eps_lag": "lr_eps", "rg_lag": "lr_rg"}.get(lr.name, lr.name)] = lr.value
    return Table(
        "ardl_bounds",
        f"Bounds test: error-correction regression of the debt change, N={ecm.nobs}",
        ["Term", "Estimate (SE)"],
        rows,
        notes=[f"bounds F({res.df[0]},{res.df[1]}) = {res.F:.3f}: {res.decision}; R-squared {ecm.rsquared:.3f}"],
        values=values,
    )


def lp_table(proj) -> Table:
    rows, values = [], {}
    for f in proj.horizons:
        r = f.result
        rows.append([str(f.h), _coef(r, "eps", 2), _coef(r, "rg", 2), str(f.nobs)])
        values.update({
            f"eps_h{f.h}": f.coef("eps"), f"se_eps_h{f.h}": f.se("eps"),
            f"rg_h{f.h}": f.coef("rg"), f"se_rg_h{f.h}": f.se("rg"), f"n_h{f.h}": float(f.nobs),
        })
    lo, hi = suite.LP_WINDOW
    notes = [f"response b(t+h) - b(t-1), {lo}-{hi}; control: lagged debt change; Newey-West lags = h"]
    if proj.truncated:
        notes.append("horizons dropped for lack of observations: " + ", ".join(map(str, proj.truncated)))
    return Table(
        "local_projection",
        "Local projections: cumulative debt response to bias and spread",
        ["h", "Bias", "Spread", "N"],
        rows,
        notes=notes,
        values=values,
    )


# --- yield, pricing and liquidity tests -----------------------------------

def yield_table(t: fair.YieldTest) -> Table:
    terms = [("r_global", "US long rate"), ("lag_dep", "Lagged real yield"), ("phi", "Captive-share proxy"),
             ("ycc", "YCC dummy"), ("qqe", "QQE dummy"), ("const", "Constant")]
    models = list(t.models)
    rows = []
    for name, label in terms:
        rows.append([label] + [_coef(m, name) if name in m.names else "" for m in models])
    rows.append(["R-squared"] + [_f(m.rsquared, 3) for m in models])
    rows.append(["N"] + [str(m.nobs) for m in models])
    values = {
        "m1_r_global": models[0].coef("r_global"),
        "m2_r_global": models[1].coef("r_global"),
        "m2_phi": models[1].coef("phi"),
        "m2_se_phi": models[1].stderr("phi"),
        "m3_r_global": models[2].coef("r_global"),
        "m3_phi": models[2].coef("phi"),
        "m3_se_phi": models[2].stderr("phi"),
        "m3_ycc": models[2].coef("ycc"),
    }
    notes = ["Newey-West errors, 3 lags"]
    for label, res in t.placebo.items():
        values[f"placebo_{label}_phi"] = res.coef("phi")
        values[f"placebo_{label}_se_phi"] = res.stderr("phi")
        notes.append(f"placebo {label}: proxy slope {cell(res.coef('phi'), res.stderr('phi'), res.pvalue('phi'))}")
    return Table(
        "yield_gap",
        "Real 10-year yield on the US rate and the captive-share proxy",
        ["Regressor", "Model 1", "Model 2", "Model 3"],
        rows,
        notes=notes,
        values=values,
    )


def real_debt_table(t: fair.RealDebtTest, sweep: list[fair.RealDebtTest] | None = None) -> Table:
    rows, values = [], {}
    if t.lp is not None:
        for f in t.lp.horizons:
            rows.append([str(f.h), cell(f.coef("treat"), f.se("treat"), f.result.pvalue("treat"), 2), str(f.nobs)])
            values[f"beta_h{f.h}"] = f.coef("treat")
            values[f"se_h{f.h}"] = f.se("treat")
    values["episodes"] = ",".join(map(str, t.episodes))
    values["confirmed"] = t.confirmed
    notes = [f"treatment: yen depreciation above {t.threshold:g}% in the year; episodes "
             + (", ".join(map(str, t.episodes)) or "none")]
    for s in sweep or []:
        if s.lp is None:
            notes.append(f"threshold {s.threshold:g}%: no episodes")
        else:
            last = s.lp.horizons[-1]
            notes.append(f"threshold {s.threshold:g}%: h={last.h} response {_f(last.coef('treat'), 2, True)}, "
                         f"{len(s.episodes)} episodes")
    notes.append("prediction (negative response from h=2): " + ("confirmed" if t.confirmed else "not confirmed"))
    return Table(
        "real_debt",
        "Real debt index after large depreciations: R(t+h) - R(t)",
        ["h", "Response (SE)", "N"],
        rows,
        notes=notes,
        values=values,
    )


def pass_through_table(t: fair.PassThroughTest) -> Table:
    rows = [
        ["Free float, yen change", _coef(t.free, "de", 4), str(t.free.nobs)],
        ["Free float, |yen change|", _coef(t.free, "abs_de", 4), ""],
        ["Captive, yen change", _coef(t.captive, "de", 4), str(t.captive.nobs)],
        ["Captive, |yen change|", _coef(t.captive, "abs_de", 4), ""],
        ["Pooled, yen change", _coef(t.interacted, "de", 4), str(t.interacted.nobs)],
        ["Pooled, yen change x captive", _coef(t.interacted, "de_x_captive", 4), ""],
    ]
    values = {
        "free_de": t.free.coef("de"), "free_se": t.free.stderr("de"), "free_n": float(t.free.nobs),
        "captive_de": t.captive.coef("de"), "captive_se": t.captive.stderr("de"),
        "captive_n": float(t.captive.nobs),
        "inter_de": t.interacted.coef("de"), "inter_de_x_captive": t.interacted.coef("de_x_captive"),
    }
    edges = ", ".join(f"{e:.2f}" for e in t.bin_edges)
    return Table(
        "pass_through_bins",
        "Monthly inflation change on the yen change, by regime",
        ["Term", "Estimate (SE)", "N"],
        rows,
        notes=[f"pooled model adds a captive dummy and |yen change| quartile effects (edges {edges})",
               "Newey-West errors, 3 lags"],
        values=values,
    )


def insulation_table(t: fair.InsulationTest) -> Table:
    rows, values = [], {}
    tags = {"Pre-QQE": "pre", "QQE": "qqe", "YCC-active": "ycc", "Post-YCC": "post"}
    for label, s in t.periods.items():
        est = "insufficient (N<4)" if s.insufficient else cell(s.beta, s.se, s.result.pvalue("r_us"))
        rows.append([label, f"{s.years[0]}-{s.years[1]}", est, str(s.nobs)])
        tag = tags.get(label, label)
        values[f"{tag}_beta"] = s.beta
        values[f"{tag}_se"] = s.se
        values[f"{tag}_n"] = float(s.nobs)
    values.update(t=t.t, p=t.p)
    p2 = {None: "not testable", True: "confirmed", False: "not confirmed"}[t.prediction_ii]
    return Table(
        "insulation",
        "Spread sensitivity to the US rate by policy period",
        ["Period", "Years", "Slope (HC3 SE)", "N"],
        rows,
        notes=[f"pre vs YCC difference: z = {_f(t.t, 2)}, p = {_f(t.p, 3)} (normal reference)",
               f"smaller YCC slope: {'confirmed' if t.prediction_i else 'not confirmed'}; "
               f"post-YCC rebound: {p2}"],
        values=values,
    )


# --- placebo and robustness tests ------------------------------------------

def placebo_table(rows_: list[suite.PlaceboRow], qe: bool = False) -> Table:
    rows, values = [], {}
    for r in rows_:
        res = r.qe if qe else r.raw
        if res is None:
            continue
        rows.append([r.country, cell(res.beta_free, res.beta_free_se), _f(res.beta_captive, 3),
                     _f(res.wald_p, 3) + (stars(res.wald_p) if math.isfinite(res.wald_p) else ""), str(res.nobs)])
        values.update({f"free_{r.country}": res.beta_free, f"se_free_{r.country}": res.beta_free_se,
                       f"captive_{r.country}": res.beta_captive, f"p_{r.country}": res.wald_p})
    key, title = ("placebo_qe", "Cross-country placebo with QE controls") if qe else \
        ("placebo", "Cross-country placebo: yield sensitivity to the US rate")
    cuts = ", ".join(f"{r.country} {r.threshold:.2f}" for r in rows_)
    return Table(
        key, title,
        ["Country", "Free slope (SE)", "Captive slope", "Wald p", "N"],
        rows,
        notes=[f"captive regime: proxy above its sample median ({cuts})", "Newey-West errors, 3 lags"],
        values=values,
    )


def lstar_table(rows_: list[suite.LstarRow]) -> Table:
    tags = {"Pre-QQE (Free)": "free", "YCC-Captive": "captive", "Full sample": "full"}
    rows, values = [], {}
    for r in rows_:
        f = r.fit
        rows.append([r.label, str(f.nobs), _f(f.gamma, 2), _f(f.c, 2), _f(f.rsquared, 4), _f(f.delta_r2, 4),
                     "yes" if f.converged else "no"])
        tag = tags.get(r.label, r.label)
        values.update({f"n_{tag}": float(f.nobs), f"gamma_{tag}": f.gamma, f"c_{tag}": f.c,
                       f"dr2_{tag}": f.delta_r2})
    return Table(
        "lstar",
        "Smooth-transition pass-through: monthly inflation change on the yen change",
        ["Sample", "N", "Speed", "Threshold", "R-squared", "Gain over linear", "Converged"],
        rows,
        values=values,
    )


# --- assembly ---------------------------------------------------------------

ECON_BUILDERS: dict[str, Callable[[SeriesCatalog], list[Table]]] = {
    "subsample": lambda cat: [subsample_table(suite.subsample_stats(cat))],
    "chow": lambda cat: [chow_table(suite.chow_break(cat))],
    "var": lambda cat: (lambda b: [var_table(b), fevd_table(b)])(suite.var_block(cat)),
    "ardl": lambda cat: [ardl_table(suite.ardl_block(cat))],
    "lp": lambda cat: [lp_table(suite.lp_block(cat))],
    "yield": lambda cat: [yield_table(fair.yield_test(cat))],
    "realdebt": lambda cat: [real_debt_table(fair.real_debt_test(cat), fair.threshold_sweep(cat))],
    "passthrough": lambda cat: [pass_through_table(fair.pass_through_test(cat))],
    "insulation": lambda cat: [insulation_table(fair.insulation_test(cat))],
    "placebo": lambda cat: (lambda rows: [placebo_table(rows), placebo_table(rows, qe=True)])(suite.placebo_block(cat)),
    "lstar": lambda cat: [lstar_table(suite.lstar_block(cat))],
}


def econ_tables(cat: SeriesCatalog, tests=None, derived: bool = False) -> list[Table]:
    """Run the named blocks (all by default) on ``cat`` and render them."""
    if not derived:
        cat = derive_series(cat)
    names = list(ECON_BUILDERS) if tests is None else list(tests)
    unknown = [n for n in names if n not in ECON_BUILDERS]
    if unknown:
        raise KeyError(f"unknown test {unknown[0]!r}; known: {', '.join(ECON_BUILDERS)}")
    out = []
    for n in names:
        out.extend(ECON_BUILDERS[n](cat))
    return out
