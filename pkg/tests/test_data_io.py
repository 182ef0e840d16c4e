import re

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from debtlab import presets
from debtlab.core_model import BASELINE
from debtlab.corridor import corridor_layers
from debtlab.data_io.catalog import DEBT, SeriesCatalog, derive_series, load_catalog
from debtlab.data_io.config import ConfigError, load_config, loads
from debtlab.data_io.emit import Table, emit_table, render_csv, render_text
from debtlab.data_io.series import (
    FORWARD_FILL_NOTE,
    CsvFormatError,
    TimeSeries,
    forward_fill_annual_to_monthly,
    load_csv,
    write_csv,
)
from debtlab.data_io.svg import emit_plot
from debtlab.data_io.synthetic import DEMO_VINTAGE, write_demo_bundle
from debtlab.scenarios import IoerDeficit, PassThrough, run_scenario
from debtlab.tables import named_scenario_table


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


class TestLoadCsv:
    def test_two_rows(self, tmp_path):
        ts = load_csv(write(tmp_path, "x.csv", "date,value\n2020,1.5\n2021,2.5\n"))
        assert len(ts) == 2 and ts.freq == "A"
        assert list(ts.values) == [1.5, 2.5]

    def test_monthly_gap(self, tmp_path):
        ts = load_csv(write(tmp_path, "m.csv", "DATE,VAL\n2020-01-01,1\n2020-02-01,.\n2020-03-01,3\n"))
        assert ts.freq == "M"
        assert ts.n_missing == 1
        assert np.isnan(ts.value("2020-02"))

    def test_malformed_row_reports_line(self, tmp_path):
        p = write(tmp_path, "bad.csv", "date,value\n2020,1\n2021,abc\n")
        with pytest.raises(CsvFormatError, match=r"bad.csv:3"):
            load_csv(p)

    def test_extra_field(self, tmp_path):
        with pytest.raises(CsvFormatError, match=":2: expected 2 fields"):
            load_csv(write(tmp_path, "e.csv", "date,value\n2020,1,2\n"))

    def test_decreasing_dates(self, tmp_path):
        with pytest.raises(CsvFormatError, match="strictly increasing"):
            load_csv(write(tmp_path, "d.csv", "date,value\n2021,1\n2020,1\n"))

    def test_annual_debt_1991_2024(self, tmp_path):
        body = "".join(f"{y},{150 + y - 1991}\n" for y in range(1991, 2025))
        assert len(load_csv(write(tmp_path, "debt.csv", "date,value\n" + body))) == 34

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.floats(-1e6, 1e6, allow_nan=False), min_size=1, max_size=30))
    def test_round_trip_twelve_digits(self, tmp_path_factory, values):
        ts = TimeSeries.annual("x", range(2000, 2000 + len(values)), values)
        p = tmp_path_factory.mktemp("rt") / "x.csv"
        write_csv(ts, p)
        back = load_csv(p)
        np.testing.assert_allclose(back.values, ts.values, rtol=1e-12, atol=1e-300)


class TestForwardFill:
    def test_step_at_january(self):
        m = forward_fill_annual_to_monthly(TimeSeries.annual("x", [2020, 2021], [1.0, 2.0]))
        assert len(m) == 24
        assert m.value("2020-12") == 1.0 and m.value("2021-01") == 2.0
        assert m.meta["note"] == FORWARD_FILL_NOTE

    def test_constant(self):
        m = forward_fill_annual_to_monthly(TimeSeries.annual("x", [2019, 2020, 2021], [3.0] * 3))
        assert set(m.values) == {3.0}

    def test_rejects_monthly(self):
        with pytest.raises(ValueError):
            forward_fill_annual_to_monthly(TimeSeries.monthly("x", "2020-01", [1.0, 2.0]))


class TestDerived:
    def small_catalog(self, b):
        cat = SeriesCatalog(vintage="test")
        years = range(2010, 2010 + len(b))
        cat.add(TimeSeries.annual(DEBT, years, b))
        cat.add(TimeSeries.annual("IRLTLT01JPM156N", years, [2.2] * len(b)))
        cat.add(TimeSeries.annual("JPNCPIALLMINMEI", years, [100 * 1.027**k for k in range(len(b))]))
        return cat

    def test_bias_at_baseline(self):
        d = derive_series(self.small_catalog([240.0] * 4))
        assert d["eps"].values[-1] == pytest.approx(0.5, abs=1e-9)

    def test_change_of_constant_debt(self):
        d = derive_series(self.small_catalog([240.0] * 4))
        assert np.all(d["db"].values == 0.0)
        assert d["db"].meta["parents"] == ("b",)

    def test_rederive_is_identical(self, tmp_path):
        write_demo_bundle(tmp_path, seed=3)
        cat = load_catalog(tmp_path)
        a, b = derive_series(cat), derive_series(cat)
        for name in a.ids():
            assert a[name].index == b[name].index
            assert a[name].values.tobytes() == b[name].values.tobytes()

    def test_demo_bundle_is_labelled(self, tmp_path):
        write_demo_bundle(tmp_path)
        assert load_catalog(tmp_path).vintage == DEMO_VINTAGE

    def test_missing_directory(self, tmp_path):
        with pytest.raises(FileNotFoundError, match="--fixtures"):
            load_catalog(tmp_path / "nope")


class TestEmit:
    def test_empty_table_is_header_only(self):
        t = Table("e", "Empty", ["a", "b"], [])
        assert render_csv(t) == "a,b,a [display],b [display]\n"

    def test_status_quo_csv(self):
        csv_text, _ = emit_table(named_scenario_table("A"))
        rows = csv_text.splitlines()[1:]
        assert len(rows) == 5
        header = csv_text.splitlines()[0].split(",")
        col = header.index("b (%) [display]")
        assert [r.split(",")[col] for r in rows] == ["240.0", "240.1", "240.2", "240.2", "240.3"]

    def test_deterministic_bytes(self, tmp_path):
        t = named_scenario_table("C-ALT")
        emit_table(t, tmp_path / "a")
        emit_table(t, tmp_path / "b")
        for suffix in (".csv", ".txt"):
            a = (tmp_path / "a" / f"{t.key}{suffix}").read_bytes()
            b = (tmp_path / "b" / f"{t.key}{suffix}").read_bytes()
            assert a == b

    def test_text_alignment(self):
        txt = render_text(Table("t", "T", ["name", "v"], [["x", 1.0], ["long", 22.5]], ["str", "f1"]))
        assert txt.splitlines()[2:] == ["name     v", "----  ----", "x      1.0", "long  22.5"]


class TestSvg:
    def test_corridor_structure(self):
        svg = emit_plot(corridor_layers(BASELINE))
        assert svg.count("<polyline") == 1
        assert svg.count("<polygon") == 1
        assert svg.count("<circle") >= 1
        assert re.search(r"<text[^>]*>baseline</text>", svg)

    def test_trajectory_plot(self):
        from debtlab.figures import trajectory_layers

        svg = emit_plot(trajectory_layers([run_scenario(presets.AGGRESSIVE_ALT, BASELINE)]))
        assert svg.startswith("<svg") or svg.startswith("<?xml")
        assert svg.count("<polyline") == 1

    def test_deterministic(self):
        a = emit_plot(corridor_layers(BASELINE))
        b = emit_plot(corridor_layers(BASELINE))
        assert a == b


class TestConfig:
    def test_packaged_baseline_matches_presets(self):
        calib, scenarios = load_config()
        assert calib == BASELINE
        for name, spec in presets.SCENARIOS.items():
            assert run_scenario(scenarios[name], calib).b.tolist() == run_scenario(spec, BASELINE).b.tolist()

    def test_inline_config(self):
        calib, sc = loads(
            "[calibration]\nalpha_pct = 0.013\n[scenario X]\nrate_hike = 0.01\ndelta_e = -5,-5,0,0\n"
            "pi = passthrough:-0.0003\ndeficit = ioer:0.5\n"
        )
        assert calib.alpha == pytest.approx(0.00013)
        assert sc["X"].pi_mode == PassThrough(-0.0003)
        assert sc["X"].deficit_mode == IoerDeficit(0.5)
        assert sc["X"].delta_e_path == (-5.0, -5.0, 0.0, 0.0)

    def test_unknown_key(self):
        with pytest.raises(ConfigError, match="bogus"):
            loads("[calibration]\nbogus = 1\n")

    def test_bad_mode(self):
        with pytest.raises(ConfigError):
            loads("[scenario X]\npi = sometimes\n")
