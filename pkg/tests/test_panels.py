import pytest

from debtlab.core_model import BASELINE
from debtlab.goldens import CORE, compare
from debtlab.panels import (
    critical_penalties,
    gamma_rows_identical,
    panel_alpha,
    panel_eps,
    panel_growth,
    panel_passthrough,
    panel_penalty,
)
from debtlab.tables import panel_a_table, panel_b_table, panel_c_table, panel_d_table, panel_e_table


def test_low_elasticity_aggressive_column():
    row = panel_alpha(BASELINE)[0]
    assert row.alpha == pytest.approx(0.00013)
    assert round(100 * row.db_aggressive, 2) == pytest.approx(5.85)


def test_penalty_cell_with_trap():
    cell = next(c for c in panel_penalty(BASELINE) if c.scenario == "D20" and c.e_bar == 5.0 and c.beta == 0.0001)
    assert 100 * cell.db == pytest.approx(3.080, abs=5e-4)
    assert cell.trap


def test_penalty_cell_growth():
    # 20-yen depreciation, threshold 5, beta 0.005 %/yen^2 -> growth 2.875%
    cell = next(c for c in panel_penalty(BASELINE) if c.scenario == "D20" and c.e_bar == 5.0 and c.beta == 0.00005)
    g = 0.022 + (0.020 - cell.db) / 2.40
    assert 100 * cell.db == pytest.approx(0.380, abs=5e-4)
    assert g == pytest.approx(0.02875, abs=1e-12)


def test_critical_penalties():
    crit = critical_penalties(BASELINE)
    assert {e: round(100 * b, 4) for e, b in crit.items() if b is not None} == {5.0: 0.0043, 10.0: 0.0097, 15.0: 0.0387}
    assert crit[20.0] is None


def test_pass_through_rows_bitwise_identical():
    cells = panel_passthrough(BASELINE)
    assert len(cells) == 16
    assert gamma_rows_identical(cells)
    assert all(c.trap for c in cells)


def test_bias_panel_marks_boundary():
    rows = panel_eps(BASELINE)
    boundary = [r for r in rows if r.verdict == "Boundary"]
    assert len(boundary) == 1
    assert 100 * boundary[0].eps == pytest.approx(0.5333, abs=1e-4)
    r75 = next(r for r in rows if abs(r.eps - 0.0075) < 1e-12)
    assert r75.verdict == "Yes"
    assert 100 * r75.width == pytest.approx(0.153, abs=5e-4)


def test_growth_panel_marks_boundary():
    rows = panel_growth(BASELINE)
    boundary = [r for r in rows if r.verdict == "Boundary"]
    assert 100 * boundary[0].g_n_star == pytest.approx(3.0333, abs=1e-4)
    w15 = next(r for r in rows if abs(r.g_n_star - 0.015) < 1e-12)
    assert 100 * w15.width == pytest.approx(-1.08, abs=5e-3)


@pytest.mark.parametrize(
    "build", [panel_a_table, panel_b_table, panel_c_table, panel_d_table, panel_e_table], ids="ABCDE"
)
def test_panel_table_against_published_cells(build):
    t = build(BASELINE)
    checks = compare(t.key, t.values, CORE[t.key])
    failed = [c.describe() for c in checks if not c.passed]
    assert checks and not failed, failed
