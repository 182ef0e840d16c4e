"""Model primitives: calibration, per-period state and the closed-form relations.

Unit convention
---------------
Every rate is a decimal per year (0.022, not 2.2). The exchange-rate
coefficients are stored per JPY/USD in decimal-growth units, so a
growth elasticity quoted as "0.050% per yen" is ``alpha=0.0005`` here.
:func:`from_percent_units` converts from the percent convention used in
published tables; nothing else in the package multiplies by 100 except
the display layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable

#: early-warning level for the captive share; an exploration constant only
PHI_WARNING = 0.85


@dataclass(frozen=True)
class Calibration:
    """Full parameter vector for the debt recursion.

    Attributes
    ----------
    b0 : float
        Debt-to-GDP ratio (2.40 means 240%).
    r_n, pi, g_n_star : float
        Nominal rate, CPI inflation and structural nominal growth, decimal/yr.
    alpha : float
        Growth response per JPY/USD of depreciation (decimal growth per yen).
    beta : float
        Quadratic depreciation penalty, decimal growth per yen squared.
    e_bar : float
        Depreciation (JPY/USD per year) beyond which the penalty switches on.
    d, s : float
        Primary deficit and seigniorage, share of GDP.
    gamma : float
        CPI pass-through per JPY/USD of cumulative depreciation (<= 0).
    phi : float
        Share of government debt held domestically, in [0, 1].
    reserves, tbills, gdp : float
        Central-bank current-account stock, floating short debt and nominal
        GDP, all in trillion yen.
    """

    b0: float = 2.40
    r_n: float = 0.022
    pi: float = 0.027
    g_n_star: float = 0.030
    alpha: float = 0.0005
    beta: float = 0.00005
    e_bar: float = 10.0
    d: float = 0.020
    s: float = 0.0
    gamma: float = -0.0002
    phi: float = 0.90
    reserves: float = 500.0
    tbills: float = 120.0
    gdp: float = 670.0

    def __post_init__(self) -> None:
        checks = {
            "b0 > 0": self.b0 > 0,
            "gdp > 0": self.gdp > 0,
            "reserves >= 0": self.reserves >= 0,
            "tbills >= 0": self.tbills >= 0,
            "e_bar > 0": self.e_bar > 0,
            "alpha >= 0": self.alpha >= 0,
            "beta >= 0": self.beta >= 0,
            "0 <= phi <= 1": 0.0 <= self.phi <= 1.0,
        }
        broken = [name for name, ok in checks.items() if not ok]
        if broken:
            raise ValueError(f"invalid calibration: {', '.join(broken)}")

    @property
    def eps(self) -> float:
        return repression_bias(self.pi, self.r_n)

    def with_(self, **changes: float) -> "Calibration":
        return replace(self, **changes)


BASELINE = Calibration()


def from_percent_units(**values: float) -> dict[str, float]:
    """Convert table-style inputs (percent, %/yen, %/yen^2) to internal decimals.

    ``b0`` is read in percent of GDP. Stocks (reserves, tbills, gdp), ``phi``
    and ``e_bar`` pass through unchanged.

    >>> from_percent_units(r_n=2.2, alpha=0.050)["alpha"]
    0.0005
    """
    scaled = {"b0", "r_n", "pi", "g_n_star", "alpha", "beta", "d", "s", "gamma"}
    out = {}
    for key, value in values.items():
        out[key] = value / 100.0 if key in scaled else value
    # round away binary noise from the division so 0.05/100 == 0.0005
    return {k: (round(v, 15) if k in scaled else v) for k, v in out.items()}


@dataclass(frozen=True)
class MacroState:
    """One year of the simulated economy. ``eps`` is derived, never stored."""

    year: int
    b: float
    r_n: float
    pi: float
    g_n: float
    delta_e: float = 0.0
    d: float = 0.0
    s: float = 0.0
    notes: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def eps(self) -> float:
        return repression_bias(self.pi, self.r_n)


def repression_bias(pi: float, r_n: float) -> float:
    """Inflation minus the nominal rate; positive means a negative real yield."""
    return pi - r_n


def nominal_growth(
    g_n_star: float, alpha: float, beta: float, e_bar: float, delta_e: float
) -> float:
    """Nominal growth after the exchange-rate channel.

    Linear in ``delta_e`` with a quadratic drag once depreciation exceeds
    ``e_bar``. Appreciation (``delta_e < 0``) never triggers the drag.
    """
    if e_bar <= 0:
        raise ValueError("e_bar must be positive")
    excess = max(0.0, delta_e - e_bar)
    return g_n_star + alpha * delta_e - beta * excess * excess


def debt_step(b_prev: float, r_n: float, g_n: float, d: float, s: float = 0.0) -> float:
    """Linearized one-year transition of the debt ratio."""
    return b_prev * (1.0 + r_n - g_n) + d - s


def exact_step_error(r_n: float, g_n: float, b_prev: float) -> float:
    """Linearized debt ratio minus exact-factor debt ratio, for one year.

    1+r-g exceeds the exact factor (1+r)/(1+g) by g(r-g)/(1+g), so the
    sign follows r-g when growth is positive.
    """
    if g_n <= -1.0:
        raise ValueError("g_n must exceed -1")
    return b_prev * g_n * (r_n - g_n) / (1.0 + g_n)


def exact_debt_step(b_prev: float, r_n: float, g_n: float, d: float, s: float = 0.0) -> float:
    """Transition with the exact growth-discount factor."""
    return b_prev * (1.0 + r_n) / (1.0 + g_n) + d - s


def ioer_adjusted_deficit(
    d_base: float,
    rate_shock: float,
    alpha_pt: float,
    reserves: float,
    tbills: float,
    gdp: float,
) -> float:
    """Primary deficit plus the extra interest on reserves and floating debt.

    ``alpha_pt`` is the share of the policy-rate shock passed through to the
    remuneration of reserves and T-bills.
    """
    if gdp <= 0:
        raise ValueError("gdp must be positive")
    if not 0.0 <= alpha_pt <= 1.0:
        raise ValueError("alpha_pt must lie in [0, 1]")
    return d_base + alpha_pt * rate_shock * (reserves + tbills) / gdp


def passthrough_inflation(pi_base: float, gamma: float, cumulative_delta_e: float) -> float:
    return pi_base + gamma * cumulative_delta_e


@dataclass(frozen=True)
class StabilityCheck:
    lhs: float
    rhs: float
    stable: bool

    def __iter__(self):
        return iter((self.lhs, self.rhs, self.stable))


def stability_check(calib: Calibration, delta_e: float = 0.0) -> StabilityCheck:
    """Compare the r-g spread with the budget term (s-d)/b.

    ``lhs`` is (pi - eps) - g_n, i.e. r_n - g_n; it is evaluated in the
    second form so it rounds the same way as :func:`debt_step`. The debt
    ratio is non-increasing exactly when ``lhs <= rhs``.
    """
    if calib.b0 == 0:
        raise ValueError("b0 must be non-zero")
    g_n = nominal_growth(calib.g_n_star, calib.alpha, calib.beta, calib.e_bar, delta_e)
    lhs = calib.r_n - g_n
    rhs = (calib.s - calib.d) / calib.b0
    return StabilityCheck(lhs, rhs, lhs <= rhs)


# Premium hooks take (phi, b) and return a non-negative spread.
PremiumHook = Callable[[float, float], float]


def zero_premium(phi: float, b: float) -> float:
    return 0.0


def linear_hinge_premium(kappa: float, phi_warn: float = PHI_WARNING) -> PremiumHook:
    """kappa * max(0, phi_warn - phi) * b.

    An exploratory form only: it rises as the captive share falls below
    ``phi_warn`` and scales with the debt stock. Its derivatives in phi and b
    are zero above the warning level, so the sign tests are weak there.
    """
    if kappa < 0:
        raise ValueError("kappa must be non-negative")

    def hook(phi: float, b: float) -> float:
        return kappa * max(0.0, phi_warn - phi) * b

    return hook


def effective_rate(r_n: float, rho: float = 0.0) -> float:
    if rho < 0:
        raise ValueError("rho must be non-negative")
    return r_n + rho


def premium_sign_violations(
    hook: PremiumHook,
    phis: list[float] | None = None,
    bs: list[float] | None = None,
    step: float = 1e-6,
) -> list[tuple[float, float, str]]:
    """Grid points where the hook breaks d(rho)/d(phi) <= 0 or d(rho)/d(b) >= 0.

    Weak inequalities are used so that flat regions (e.g. the zero hook)
    pass; a hook that is flat everywhere carries no risk premium at all.
    """
    phis = phis if phis is not None else [0.5 + 0.05 * i for i in range(10)]
    bs = bs if bs is not None else [0.5 + 0.5 * i for i in range(6)]
    bad = []
    for phi in phis:
        for b in bs:
            d_phi = hook(phi + step, b) - hook(phi - step, b)
            d_b = hook(phi, b + step) - hook(phi, b - step)
            if d_phi > 0:
                bad.append((phi, b, "phi"))
            if d_b < 0:
                bad.append((phi, b, "b"))
            if hook(phi, b) < 0 or math.isnan(hook(phi, b)):
                bad.append((phi, b, "negative"))
    return bad
