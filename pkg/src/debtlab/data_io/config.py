"""Scenario configuration files (INI syntax, read with :mod:`configparser`).

Layout::

    [calibration]
    b0 = 2.40
    r_n = 0.022
    alpha_pct = 0.050        ; percent of growth per JPY/USD, converted on load

    [scenario B]
    rate_hike = 0.005
    delta_e = -10            ; scalar broadcast, or a comma list per year
    pi = fixed               ; fixed | fixed:0.027 | passthrough | passthrough:-0.0002 | exogenous:0.015,0.010
    deficit = ioer:1.0       ; fixed | fixed:0.0246 | ioer:<alpha_pt>
    start_year = 2026
    horizon = 4
    revert_after = 2

Rates are decimals. Coefficients may be given in internal decimal units
(``alpha``, ``beta``, ``gamma``) or in quoted percent units with a ``_pct``
suffix (``alpha_pct = 0.050``). Unknown keys are rejected.
"""

from __future__ import annotations

import configparser
from importlib import resources
from pathlib import Path

from ..core_model import BASELINE, Calibration
from ..scenarios import (
    ExogenousInflation,
    FixedDeficit,
    FixedInflation,
    IoerDeficit,
    PassThrough,
    ScenarioSpec,
)

_CALIB_FIELDS = set(Calibration.__dataclass_fields__)
_PCT_FIELDS = {"alpha_pct": "alpha", "beta_pct": "beta", "gamma_pct": "gamma"}
_SCENARIO_KEYS = {"rate_hike", "delta_e", "pi", "deficit", "start_year", "horizon", "revert_after", "description"}


class ConfigError(ValueError):
    pass


def _floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.replace(" ", "").split(",") if v)
    except ValueError:
        raise ConfigError(f"expected a number or comma list, got {text!r}") from None


def _schedule(text: str):
    vals = _floats(text)
    return vals[0] if len(vals) == 1 else vals


def _pi_mode(text: str):
    kind, _, arg = text.partition(":")
    kind = kind.strip().lower()
    if kind == "fixed":
        return FixedInflation(float(arg) if arg else None)
    if kind == "passthrough":
        return PassThrough(float(arg) if arg else None)
    if kind == "exogenous":
        if not arg:
            raise ConfigError("exogenous inflation needs a schedule")
        return ExogenousInflation(_floats(arg))
    raise ConfigError(f"unknown inflation mode {kind!r}")


def _deficit_mode(text: str):
    kind, _, arg = text.partition(":")
    kind = kind.strip().lower()
    if kind == "fixed":
        return FixedDeficit(float(arg) if arg else None)
    if kind == "ioer":
        return IoerDeficit(float(arg) if arg else 1.0)
    raise ConfigError(f"unknown deficit mode {kind!r}")


def parse_calibration(section, base: Calibration = BASELINE) -> Calibration:
    updates = {}
    for key, raw in section.items():
        if key in _PCT_FIELDS:
            updates[_PCT_FIELDS[key]] = float(raw) / 100.0
        elif key in _CALIB_FIELDS:
            updates[key] = float(raw)
        else:
            raise ConfigError(f"unknown calibration key {key!r}")
    try:
        return base.with_(**updates)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def parse_scenario(name: str, section) -> ScenarioSpec:
    unknown = set(section) - _SCENARIO_KEYS
    if unknown:
        raise ConfigError(f"scenario {name!r}: unknown keys {sorted(unknown)}")
    kw = {"name": name}
    if "rate_hike" in section:
        kw["rate_hike"] = _schedule(section["rate_hike"])
    if "delta_e" in section:
        kw["delta_e_path"] = _schedule(section["delta_e"])
    if "pi" in section:
        kw["pi_mode"] = _pi_mode(section["pi"])
    if "deficit" in section:
        kw["deficit_mode"] = _deficit_mode(section["deficit"])
    for key in ("start_year", "horizon", "revert_after"):
        if key in section:
            kw[key] = int(section[key])
    if "description" in section:
        kw["description"] = section["description"]
    try:
        return ScenarioSpec(**kw)
    except ValueError as exc:
        raise ConfigError(f"scenario {name!r}: {exc}") from None


def loads(text: str, source: str = "<string>") -> tuple[Calibration, dict[str, ScenarioSpec]]:
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"), interpolation=None)
    try:
        parser.read_string(text, source=source)
    except configparser.Error as exc:
        raise ConfigError(str(exc)) from None
    calib = parse_calibration(parser["calibration"]) if parser.has_section("calibration") else BASELINE
    scenarios = {}
    for sec in parser.sections():
        if sec == "calibration":
            continue
        kind, _, name = sec.partition(" ")
        if kind != "scenario" or not name.strip():
            raise ConfigError(f"unknown section [{sec}]")
        scenarios[name.strip()] = parse_scenario(name.strip(), parser[sec])
    return calib, scenarios


def load_config(path=None) -> tuple[Calibration, dict[str, ScenarioSpec]]:
    """Read a config file; with no path, read the bundled baseline."""
    if path is None:
        text = resources.files("debtlab.data").joinpath("baseline.ini").read_text(encoding="utf-8")
        return loads(text, "baseline.ini")
    p = Path(path)
    if not p.is_file():
        raise ConfigError(f"config file {p} not found")
    return loads(p.read_text(encoding="utf-8"), str(p))
