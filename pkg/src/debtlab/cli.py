"""Command-line entry point: ``debtlab <command> [options]``.

Exit status is 0 on success, 1 when a requested golden comparison fails
and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from . import tables
from .corridor import OperatingPoint
from .data_io.catalog import FIXTURE_ENV, load_catalog, resolve_fixture_dir
from .data_io.config import ConfigError, load_config
from .data_io.emit import emit_table, render_text
from .data_io.svg import emit_plot
from .figures import corridor_figure, trajectory_layers
from .scenarios import run_scenario

PANELS = {
    "A": tables.panel_a_table,
    "B": tables.panel_b_table,
    "C": tables.panel_c_table,
    "D": tables.panel_d_table,
    "E": tables.panel_e_table,
}


class UsageError(Exception):
    pass


def _show(tbls, out: str | None) -> None:
    for k, t in enumerate(tbls):
        if k:
            sys.stdout.write("\n")
        sys.stdout.write(render_text(t))
        if out:
            emit_table(t, out)


def cmd_simulate(args) -> int:
    calib, scenarios = load_config(args.config)
    if args.scenario not in scenarios:
        raise UsageError(f"unknown scenario {args.scenario!r}; known: {', '.join(scenarios)}")
    spec = scenarios[args.scenario]
    t = tables.named_scenario_table(args.scenario, calib, spec)
    out = args.out or ("." if args.plot else None)
    _show([t], out)
    if args.plot:
        path = Path(out) / f"{t.key}.svg"
        emit_plot(trajectory_layers([run_scenario(spec, calib)], t.title), path)
        print(f"wrote {Path(out) / (t.key + '.csv')} and {path}", file=sys.stderr)
    return 0


def cmd_corridor(args) -> int:
    calib, _ = load_config(args.config)
    point = None
    if args.eps is not None or args.gstar is not None:
        eps = calib.eps if args.eps is None else args.eps / 100
        g = calib.g_n_star if args.gstar is None else args.gstar / 100
        point = OperatingPoint(eps, g, "point")
    _show([tables.corridor_table(calib, point), tables.closed_forms_table(calib)], args.out)
    if args.plot:
        out = Path(args.out or ".")
        out.mkdir(parents=True, exist_ok=True)
        layers = corridor_figure(calib)
        if point is not None:
            layers["points"].append({"label": "point", "xy": (100 * point.eps, 100 * point.g_n_star)})
        emit_plot(layers, out / "corridor.svg")
    return 0


def cmd_ratchet(args) -> int:
    calib, _ = load_config(args.config)
    _show([tables.ratchet_table(calib), tables.ratchet_gap_table(calib)], args.out)
    return 0


def cmd_sweep(args) -> int:
    calib, _ = load_config(args.config)
    _show([tables.sweep_table(calib)], args.out)
    return 0


def cmd_fan(args) -> int:
    calib, _ = load_config(args.config)
    _show([tables.fan_table(calib)], args.out)
    return 0


def cmd_panels(args) -> int:
    calib, _ = load_config(args.config)
    names = args.panel or list(PANELS)
    _show([PANELS[n](calib) for n in names], args.out)
    return 0


def _catalog(fixtures):
    d = resolve_fixture_dir(fixtures)
    if d is None:
        raise UsageError(
            f"no fixture directory: pass --fixtures DIR or set {FIXTURE_ENV} "
            "(`debtlab demo-data DIR` writes a synthetic bundle for trying the commands)"
        )
    try:
        return load_catalog(d)
    except FileNotFoundError as exc:
        raise UsageError(str(exc)) from None


def cmd_econ(args) -> int:
    from .econ_tables import ECON_BUILDERS, econ_tables

    if args.test not in ECON_BUILDERS:
        raise UsageError(f"unknown test {args.test!r}; known: {', '.join(ECON_BUILDERS)}")
    cat = _catalog(args.fixtures)
    if cat.vintage != "2026-03":
        print(f"note: data vintage {cat.vintage!r}; published values are not expected to match", file=sys.stderr)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        _show(econ_tables(cat, [args.test]), args.out)
    return 0


def cmd_reproduce_all(args) -> int:
    from .reproduce import reproduce_all

    calib, _ = load_config(args.config)
    fixtures = args.fixtures
    if fixtures is not None and not Path(fixtures).is_dir():
        raise UsageError(f"fixture directory {fixtures} not found")
    m = reproduce_all(args.out, fixtures, args.skip_contingent, calib)
    sys.stdout.write(m.to_text())
    return 0 if m.ok else 1


def cmd_demo_data(args) -> int:
    from .data_io.synthetic import write_demo_bundle

    d = write_demo_bundle(args.directory, seed=args.seed)
    print(f"wrote synthetic bundle to {d} (invented numbers; vintage 'synthetic-demo')")
    return 0


def cmd_montecarlo(args) -> int:
    from .econometrics.montecarlo import run_all

    for r in run_all(seed=args.seed, reps=args.reps):
        print(f"{r.name:<24} rate {r.rate:.4f} over {r.reps} reps (target {r.target})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="debtlab", description="Debt-ratio scenarios, corridor and econometrics")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, config=True, out=True):
        sp = sub.add_parser(name, help=help_)
        if config:
            sp.add_argument("--config", help="INI file with [calibration] and [scenario NAME] sections")
        if out:
            sp.add_argument("--out", help="directory for CSV/text (and SVG) output")
        sp.set_defaults(func=func)
        return sp

    sp = add("simulate", cmd_simulate, "run one named scenario")
    sp.add_argument("scenario")
    sp.add_argument("--plot", action="store_true", help="also write an SVG of the path")

    sp = add("corridor", cmd_corridor, "corridor width, boundaries and band verdict")
    sp.add_argument("--eps", type=float, help="repression bias in percent")
    sp.add_argument("--gstar", type=float, help="structural nominal growth in percent")
    sp.add_argument("--plot", action="store_true")

    add("ratchet", cmd_ratchet, "temporary shock then reversion")
    add("sweep", cmd_sweep, "IOER pass-through sweep")
    add("fan", cmd_fan, "one-SD parameter bands on 2030 debt")
    sp = add("panels", cmd_panels, "sensitivity panels A-E")
    sp.add_argument("panel", nargs="*", choices=list(PANELS), metavar="PANEL")

    sp = add("econ", cmd_econ, "one empirical test on a fixture bundle", config=False)
    sp.add_argument("test")
    sp.add_argument("--fixtures", help=f"fixture directory (default: ${FIXTURE_ENV})")

    sp = add("reproduce-all", cmd_reproduce_all, "every table and figure with golden checks", out=False)
    sp.add_argument("--out", default="debtlab_out")
    sp.add_argument("--fixtures", help=f"fixture directory (default: ${FIXTURE_ENV})")
    sp.add_argument("--skip-contingent", action="store_true", help="do not compare data-vintage goldens")

    sp = add("demo-data", cmd_demo_data, "write a seeded synthetic fixture bundle", config=False, out=False)
    sp.add_argument("directory")
    sp.add_argument("--seed", type=int, default=2026)

    sp = add("montecarlo", cmd_montecarlo, "estimator size and power checks", config=False, out=False)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--reps", type=int, default=2000)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ConfigError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"debtlab: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
