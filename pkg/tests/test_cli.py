import json

import pytest

from debtlab.cli import main
from debtlab.data_io.emit import render_text
from debtlab.tables import named_scenario_table


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_simulate_prints_the_table(capsys):
    code, out, _ = run(capsys, "simulate", "A")
    assert code == 0
    assert out == render_text(named_scenario_table("A"))
    assert "240.3" in out.splitlines()[-1]


def test_unknown_scenario_lists_names(capsys):
    code, _, err = run(capsys, "simulate", "Q")
    assert code == 2
    assert "known: A, B, B+, C, C-ALT, STRESS" in err


def test_simulate_plot_writes_csv_and_svg(capsys, tmp_path):
    code, _, _ = run(capsys, "simulate", "C-ALT", "--plot", "--out", str(tmp_path))
    assert code == 0
    (csv,) = tmp_path.glob("*.csv")
    (svg,) = tmp_path.glob("*.svg")
    assert csv.stem == svg.stem
    assert "<polyline" in svg.read_text()


def test_corridor_reading(capsys):
    code, out, _ = run(capsys, "corridor")
    assert code == 0
    assert "-0.024" in out and "within error band" in out


def test_corridor_point(capsys):
    code, out, _ = run(capsys, "corridor", "--eps", "0.75")
    assert code == 0
    assert "+0.153" in out and "inside corridor" in out


@pytest.mark.parametrize("cmd", [["ratchet"], ["sweep"], ["fan"], ["panels", "D", "E"]])
def test_model_commands(capsys, cmd):
    code, out, _ = run(capsys, *cmd)
    assert code == 0 and out.strip()


def test_config_override(capsys, tmp_path):
    cfg = tmp_path / "c.ini"
    cfg.write_text("[calibration]\nb0 = 1.0\n[scenario flat]\n")
    code, out, _ = run(capsys, "simulate", "flat", "--config", str(cfg))
    assert code == 0 and "100.0" in out


def test_bad_config(capsys, tmp_path):
    cfg = tmp_path / "c.ini"
    cfg.write_text("[calibration]\nnonsense = 1\n")
    code, _, err = run(capsys, "ratchet", "--config", str(cfg))
    assert code == 2 and "nonsense" in err


def test_econ_without_fixtures(capsys, monkeypatch):
    monkeypatch.delenv("DEBTLAB_FIXTURES", raising=False)
    code, _, err = run(capsys, "econ", "chow")
    assert code == 2
    assert "--fixtures" in err and "demo-data" in err


def test_econ_on_demo_bundle(capsys, tmp_path):
    assert run(capsys, "demo-data", str(tmp_path / "fx"))[0] == 0
    code, out, err = run(capsys, "econ", "chow", "--fixtures", str(tmp_path / "fx"))
    assert code == 0
    assert "synthetic-demo" in err
    assert "F(" in out or "Chow" in out


def test_econ_unknown_test(capsys, tmp_path):
    code, _, err = run(capsys, "econ", "nope", "--fixtures", str(tmp_path))
    assert code == 2 and "known:" in err


def test_reproduce_all_exit_code_tracks_goldens(capsys, tmp_path, monkeypatch):
    monkeypatch.delenv("DEBTLAB_FIXTURES", raising=False)
    out_dir = tmp_path / "new" / "out"
    code, out, _ = run(capsys, "reproduce-all", "--out", str(out_dir))
    manifest = json.loads((out_dir / "manifest.json").read_text())
    failed = [a["key"] for a in manifest["artifacts"] if a["status"] == "FAIL"]
    assert code == (1 if failed else 0)
    assert len(manifest["artifacts"]) >= 20
    assert "artifacts:" in out


def test_reproduce_all_missing_fixture_dir(capsys, tmp_path):
    code, _, err = run(capsys, "reproduce-all", "--out", str(tmp_path), "--fixtures", str(tmp_path / "none"))
    assert code == 2 and "not found" in err


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "debtlab", "simulate", "A"], capture_output=True, text=True)
    assert res.returncode == 0 and "240.3" in res.stdout
