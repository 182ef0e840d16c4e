"""One-shot regeneration of every table and figure with golden comparisons."""

from __future__ import annotations

import json
import warnings
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .core_model import BASELINE, Calibration
from .data_io.catalog import load_catalog, resolve_fixture_dir
from .data_io.emit import emit_table
from .data_io.svg import emit_plot
from .econ_tables import econ_tables
from .figures import FIGURES
from .goldens import CONTINGENT, CONTINGENT_VINTAGE, CORE, Check, compare
from .tables import model_tables


@dataclass
class Artifact:
    key: str
    kind: str  # "table" | "figure"
    tier: str  # "core" | "contingent" | "none"
    files: list[str]
    status: str  # PASS | FAIL | EMITTED | NOT COMPARED | SKIPPED | ERROR
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    note: str = ""


@dataclass
class Manifest:
    artifacts: list[Artifact]
    vintage: str | None
    compared_contingent: bool

    @property
    def ok(self) -> bool:
        return all(a.status not in ("FAIL", "ERROR") for a in self.artifacts)

    def count(self, status: str) -> int:
        return sum(a.status == status for a in self.artifacts)

    def to_text(self) -> str:
        w = max(len(a.key) for a in self.artifacts)
        lines = [f"{'artifact'.ljust(w)}  kind    tier        status        checks  note"]
        for a in self.artifacts:
            note = a.note or (f"{len(a.failures)} failed" if a.failures else "")
            lines.append(f"{a.key.ljust(w)}  {a.kind:<6}  {a.tier:<10}  {a.status:<12}  {a.checks:>6}  {note}".rstrip())
        lines.append("")
        lines.append(
            f"{len(self.artifacts)} artifacts: {self.count('PASS')} pass, {self.count('FAIL')} fail, "
            f"{self.count('ERROR')} error, {self.count('EMITTED')} emitted without goldens, "
            f"{self.count('NOT COMPARED') + self.count('SKIPPED')} not compared"
        )
        for a in self.artifacts:
            for f in a.failures:
                lines.append(f)
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {"vintage": self.vintage, "compared_contingent": self.compared_contingent, "ok": self.ok,
             "artifacts": [asdict(a) for a in self.artifacts]},
            indent=2,
            sort_keys=True,
        ) + "\n"


def _status(checks: list[Check]) -> tuple[str, list[str]]:
    bad = [c.describe() for c in checks if not c.passed]
    return ("FAIL" if bad else "PASS"), bad


def reproduce_all(
    out_dir,
    fixtures=None,
    skip_contingent: bool = False,
    calib: Calibration = BASELINE,
) -> Manifest:
    """Write every artifact under ``out_dir`` and compare it with its goldens.

    Core goldens are always compared. Econometric goldens are compared only
    when a fixture bundle is found, its vintage matches the archived one and
    ``skip_contingent`` is off; otherwise those tables are still emitted
    (when data exist) but marked NOT COMPARED.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    arts: list[Artifact] = []

    for t in model_tables(calib):
        emit_table(t, out)
        files = [f"{t.key}.csv", f"{t.key}.txt"]
        if t.key in CORE:
            checks = compare(t.key, t.values, CORE[t.key])
            status, bad = _status(checks)
            arts.append(Artifact(t.key, "table", "core", files, status, len(checks), bad))
        else:
            arts.append(Artifact(t.key, "table", "none", files, "EMITTED"))

    for key, build in FIGURES.items():
        emit_plot(build(calib), out / f"{key}.svg")
        arts.append(Artifact(key, "figure", "none", [f"{key}.svg"], "EMITTED"))

    fixture_dir = resolve_fixture_dir(fixtures)
    vintage = None
    compare_econ = False
    if fixture_dir is None:
        for key in CONTINGENT:
            arts.append(Artifact(key, "table", "contingent", [], "SKIPPED", note="no fixture directory"))
    else:
        cat = load_catalog(fixture_dir)
        vintage = cat.vintage
        compare_econ = not skip_contingent and vintage == CONTINGENT_VINTAGE
        reason = "--skip-contingent" if skip_contingent else f"vintage {vintage!r} is not {CONTINGENT_VINTAGE!r}"
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            tables = econ_tables(cat)
        for t in tables:
            emit_table(t, out)
            files = [f"{t.key}.csv", f"{t.key}.txt"]
            if compare_econ:
                checks = compare(t.key, t.values, CONTINGENT.get(t.key, []))
                status, bad = _status(checks)
                arts.append(Artifact(t.key, "table", "contingent", files, status, len(checks), bad))
            else:
                arts.append(Artifact(t.key, "table", "contingent", files, "NOT COMPARED", note=reason))

    manifest = Manifest(arts, vintage, compare_econ)
    (out / "manifest.txt").write_text(manifest.to_text(), encoding="utf-8")
    (out / "manifest.json").write_text(manifest.to_json(), encoding="utf-8")
    return manifest
