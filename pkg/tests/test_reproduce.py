import json
import math
import warnings

import pytest

from debtlab.goldens import CONTINGENT, CORE, Golden, compare, matches
from debtlab.reproduce import reproduce_all
from debtlab.data_io.synthetic import write_demo_bundle


class TestMatches:
    def test_rounds_before_comparing(self):
        assert matches(Golden("x", 240.3, 0.05, 1), 240.316)
        assert not matches(Golden("x", 265.0, 0.05, 1), 264.947)

    def test_plain_tolerance(self):
        assert matches(Golden("x", 0.0043, 1e-4), 0.00431)
        assert not matches(Golden("x", 0.0043, 1e-4), 0.0045)

    def test_bool_and_str(self):
        assert matches(Golden("x", True), True)
        assert not matches(Golden("x", "No"), "Yes")

    def test_missing_and_nan(self):
        checks = compare("t", {"a": math.nan}, [Golden("a", 1.0, 0.1), Golden("b", 1.0, 0.1)])
        assert [c.passed for c in checks] == [False, False]


@pytest.fixture(scope="module")
def core_run(tmp_path_factory):
    mp = pytest.MonkeyPatch()
    mp.delenv("DEBTLAB_FIXTURES", raising=False)
    out = tmp_path_factory.mktemp("out")
    yield out, reproduce_all(out)
    mp.undo()


def test_every_core_golden_has_an_artifact(core_run):
    _, m = core_run
    keys = {a.key for a in m.artifacts}
    assert set(CORE) <= keys
    assert len(m.artifacts) >= 20


def test_files_written(core_run):
    out, m = core_run
    for a in m.artifacts:
        for f in a.files:
            assert (out / f).stat().st_size > 0
    assert json.loads((out / "manifest.json").read_text())["ok"] == m.ok


def test_without_fixtures_contingent_is_skipped(core_run):
    _, m = core_run
    contingent = [a for a in m.artifacts if a.tier == "contingent"]
    assert {a.key for a in contingent} == set(CONTINGENT)
    assert all(a.status == "SKIPPED" for a in contingent)


def test_output_is_deterministic(core_run, tmp_path):
    out, _ = core_run
    reproduce_all(tmp_path)
    for f in sorted(out.iterdir()):
        assert (tmp_path / f.name).read_bytes() == f.read_bytes(), f.name


def test_other_vintage_is_not_compared(tmp_path):
    fx = write_demo_bundle(tmp_path / "fx")
    m = reproduce_all(tmp_path / "out", fixtures=fx)
    econ = [a for a in m.artifacts if a.tier == "contingent"]
    assert {a.key for a in econ} == set(CONTINGENT)
    assert all(a.status == "NOT COMPARED" for a in econ)
    assert not m.compared_contingent


def test_skip_flag(tmp_path):
    fx = write_demo_bundle(tmp_path / "fx")
    (fx / "VINTAGE").write_text("2026-03\n")
    m = reproduce_all(tmp_path / "out", fixtures=fx, skip_contingent=True)
    econ = [a for a in m.artifacts if a.tier == "contingent"]
    assert all(a.status == "NOT COMPARED" and a.note == "--skip-contingent" for a in econ)


def test_econ_tables_carry_every_golden_key(tmp_path):
    from debtlab.data_io.catalog import load_catalog
    from debtlab.econ_tables import econ_tables

    cat = load_catalog(write_demo_bundle(tmp_path))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        tables = {t.key: t for t in econ_tables(cat)}
    for key, goldens in CONTINGENT.items():
        missing = [g.key for g in goldens if g.key not in tables[key].values]
        assert not missing, (key, missing)
