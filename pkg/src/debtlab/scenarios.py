"""Multi-year policy experiments built on the one-step recursion."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Sequence, Union

import numpy as np

from .core_model import (
    Calibration,
    MacroState,
    debt_step,
    ioer_adjusted_deficit,
    nominal_growth,
    passthrough_inflation,
)

Schedule = Union[float, Sequence[float]]


# --- inflation and deficit modes -------------------------------------------

@dataclass(frozen=True)
class FixedInflation:
    """Inflation held at ``value`` (calibration value when None)."""

    value: float | None = None


@dataclass(frozen=True)
class PassThrough:
    """Inflation moves with cumulative depreciation; ``gamma`` defaults to the calibration's."""

    gamma: float | None = None


@dataclass(frozen=True)
class ExogenousInflation:
    schedule: tuple[float, ...]


@dataclass(frozen=True)
class FixedDeficit:
    value: float | None = None


@dataclass(frozen=True)
class IoerDeficit:
    """Base deficit plus the pass-through share of the hike on reserves and T-bills.

    ``gdp`` overrides the calibration denominator, for the tighter-denominator
    robustness variant.
    """

    alpha_pt: float = 1.0
    gdp: float | None = None


InflationMode = Union[FixedInflation, PassThrough, ExogenousInflation]
DeficitMode = Union[FixedDeficit, IoerDeficit]


@dataclass(frozen=True)
class ScenarioSpec:
    name: str
    start_year: int = 2026
    horizon: int = 4
    rate_hike: Schedule = 0.0
    delta_e_path: Schedule = 0.0
    pi_mode: InflationMode = FixedInflation()
    deficit_mode: DeficitMode = FixedDeficit()
    revert_after: int | None = None
    description: str = ""

    def __post_init__(self) -> None:
        if self.horizon < 1:
            raise ValueError("horizon must be at least 1")
        for label, sched in (
            ("rate_hike", self.rate_hike),
            ("delta_e_path", self.delta_e_path),
            ("pi schedule", getattr(self.pi_mode, "schedule", 0.0)),
        ):
            if not np.isscalar(sched) and len(sched) < self._years_with_own_params():
                raise ValueError(
                    f"{self.name}: {label} has {len(sched)} entries, "
                    f"needs {self._years_with_own_params()}"
                )

    def _years_with_own_params(self) -> int:
        if self.revert_after is None:
            return self.horizon
        return min(self.horizon, self.revert_after)

    def with_(self, **changes) -> "ScenarioSpec":
        return replace(self, **changes)


def _at(schedule: Schedule, t: int) -> float:
    return float(schedule) if np.isscalar(schedule) else float(schedule[t])


@dataclass(frozen=True)
class Trajectory:
    name: str
    states: tuple[MacroState, ...]

    def __post_init__(self) -> None:
        years = [s.year for s in self.states]
        if any(b - a != 1 for a, b in zip(years, years[1:])):
            raise ValueError("trajectory years must increase by one")

    @property
    def years(self) -> list[int]:
        return [s.year for s in self.states]

    @property
    def b(self) -> np.ndarray:
        return np.array([s.b for s in self.states])

    @property
    def final(self) -> MacroState:
        return self.states[-1]

    def at(self, year: int) -> MacroState:
        return self.states[year - self.states[0].year]

    def b_at(self, year: int) -> float:
        return self.at(year).b


def _base_state(spec: ScenarioSpec, calib: Calibration) -> MacroState:
    return MacroState(
        year=spec.start_year,
        b=calib.b0,
        r_n=calib.r_n,
        pi=calib.pi,
        g_n=calib.g_n_star,
        delta_e=0.0,
        d=calib.d,
        s=calib.s,
    )


def run_scenario(spec: ScenarioSpec, calib: Calibration) -> Trajectory:
    """Simulate ``spec.horizon`` years after the unshocked base year.

    Each year the hike sets the rate, depreciation sets growth, inflation
    and the deficit follow their modes and the debt ratio is stepped. After
    ``revert_after`` years every input returns to the calibration values.
    """
    states = [_base_state(spec, calib)]
    b = calib.b0
    cum_de = 0.0
    for t in range(spec.horizon):
        shocked = spec.revert_after is None or t < spec.revert_after
        hike = _at(spec.rate_hike, t) if shocked else 0.0
        de = _at(spec.delta_e_path, t) if shocked else 0.0
        cum_de += de
        r = calib.r_n + hike
        g = nominal_growth(calib.g_n_star, calib.alpha, calib.beta, calib.e_bar, de)

        mode = spec.pi_mode if shocked else FixedInflation()
        if isinstance(mode, FixedInflation):
            pi = calib.pi if mode.value is None else mode.value
        elif isinstance(mode, PassThrough):
            gamma = calib.gamma if mode.gamma is None else mode.gamma
            pi = passthrough_inflation(calib.pi, gamma, cum_de)
        else:
            pi = float(mode.schedule[t])

        dmode = spec.deficit_mode if shocked else FixedDeficit()
        if isinstance(dmode, FixedDeficit):
            d = calib.d if dmode.value is None else dmode.value
        else:
            gdp = calib.gdp if dmode.gdp is None else dmode.gdp
            d = ioer_adjusted_deficit(calib.d, hike, dmode.alpha_pt, calib.reserves, calib.tbills, gdp)

        b = debt_step(b, r, g, d, calib.s)
        states.append(
            MacroState(year=spec.start_year + t + 1, b=b, r_n=r, pi=pi, g_n=g, delta_e=de, d=d, s=calib.s)
        )
    return Trajectory(spec.name, tuple(states))


def year_one_accumulation(spec: ScenarioSpec, calib: Calibration) -> float:
    """Debt added in the first simulated year, as a share of GDP."""
    traj = run_scenario(spec.with_(horizon=1, revert_after=None), calib)
    return traj.states[1].b - traj.states[0].b


# --- ratchet ---------------------------------------------------------------

@dataclass(frozen=True)
class RatchetResult:
    baseline: Trajectory
    shocked: Trajectory
    gap: np.ndarray
    decay_factor: float
    shock_len: int

    def gap_at(self, year: int) -> float:
        return float(self.gap[year - self.baseline.states[0].year])


def ratchet_experiment(
    calib: Calibration, shock_spec: ScenarioSpec, shock_len: int, total_horizon: int
) -> RatchetResult:
    """Run a temporary shock, revert to baseline inputs, and track the gap.

    Once the shock ends both paths share r and g, so the gap shrinks by the
    factor 1 + r - g every year.
    """
    if not 0 <= shock_len < total_horizon:
        raise ValueError("need 0 <= shock_len < total_horizon")
    base_spec = ScenarioSpec("baseline", start_year=shock_spec.start_year, horizon=total_horizon)
    baseline = run_scenario(base_spec, calib)
    shocked = run_scenario(
        shock_spec.with_(name=f"{shock_spec.name} ({shock_len}-yr shock)", horizon=total_horizon, revert_after=shock_len),
        calib,
    )
    gap = shocked.b - baseline.b
    return RatchetResult(baseline, shocked, gap, 1.0 + calib.r_n - calib.g_n_star, shock_len)


def gap_half_life(r_minus_g: float) -> float:
    """Years for a debt gap to halve when it decays by 1 + (r - g) per year."""
    if r_minus_g >= 0:
        return math.inf
    return math.log(2.0) / math.log(1.0 / (1.0 + r_minus_g))


def steady_state_debt(d: float, g_minus_r: float) -> float:
    if g_minus_r <= 0:
        raise ValueError("no finite attractor when g - r <= 0")
    return d / g_minus_r


def long_run_path(calib: Calibration, years: int) -> np.ndarray:
    """Debt ratios for ``years`` steps at constant calibration inputs."""
    out = np.empty(years + 1)
    out[0] = calib.b0
    for t in range(years):
        out[t + 1] = debt_step(out[t], calib.r_n, calib.g_n_star, calib.d, calib.s)
    return out


# --- sweeps ----------------------------------------------------------------

@dataclass(frozen=True)
class SweepRow:
    alpha_pt: float
    d: float
    b_final: float
    gap_vs_baseline: float

    @property
    def trap(self) -> bool:
        return self.gap_vs_baseline > 0


def ioer_sweep(
    calib: Calibration,
    base_spec: ScenarioSpec,
    alpha_pt_list: Sequence[float],
    reference: Trajectory | None = None,
) -> list[SweepRow]:
    """Final-year debt as the IOER pass-through share varies.

    Gaps are measured against the same year of ``reference`` (the
    unshocked baseline by default).
    """
    if reference is None:
        reference = run_scenario(
            ScenarioSpec("baseline", start_year=base_spec.start_year, horizon=base_spec.horizon), calib
        )
    rows = []
    for a in alpha_pt_list:
        mode = base_spec.deficit_mode
        gdp = mode.gdp if isinstance(mode, IoerDeficit) else None
        traj = run_scenario(base_spec.with_(deficit_mode=IoerDeficit(a, gdp)), calib)
        final = traj.final
        rows.append(SweepRow(a, final.d, final.b, final.b - reference.b_at(final.year)))
    return rows


@dataclass(frozen=True)
class Perturbation:
    """One fan-chart row: the same scenario under three values of one input.

    ``values`` are ordered (unfavorable, base, favorable). ``field`` names a
    :class:`Calibration` attribute; the special name ``"eps"`` moves the
    nominal rate so that pi - r_n takes the given value, shifted by any
    rate hike in the scenario.
    """

    scenario: ScenarioSpec
    field: str
    values: tuple[float, float, float]
    label: str = ""


@dataclass(frozen=True)
class FanRow:
    scenario: str
    label: str
    b_final: tuple[float, float, float]

    @property
    def range(self) -> float:
        return max(self.b_final) - min(self.b_final)


def _perturbed(calib: Calibration, field_name: str, value: float) -> Calibration:
    if field_name == "eps":
        return calib.with_(r_n=calib.pi - value)
    return calib.with_(**{field_name: value})


def fan_chart(calib: Calibration, perturbations: Sequence[Perturbation]) -> list[FanRow]:
    rows = []
    for p in perturbations:
        finals = tuple(run_scenario(p.scenario, _perturbed(calib, p.field, v)).final.b for v in p.values)
        rows.append(FanRow(p.scenario.name, p.label or p.field, finals))
    return rows


def beta_critical(g_base: float, g_min: float, delta_e: float, e_bar: float) -> float | None:
    """Penalty coefficient at which depreciation growth just reaches ``g_min``.

    Returns None when ``delta_e <= e_bar``: the penalty is inactive and no
    coefficient can destabilize.
    """
    if delta_e <= e_bar:
        return None
    return (g_base - g_min) / (delta_e - e_bar) ** 2
