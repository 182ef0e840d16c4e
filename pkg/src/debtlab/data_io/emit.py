"""Deterministic table rendering: CSV (full precision) and aligned text/markdown."""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Sequence


def _clean(s: str) -> str:
    """Drop the sign from a rounded zero such as '-0.00' or '+0.0'."""
    if s.lstrip("+-").strip("0.") == "":
        return s.lstrip("+-")
    return s


def _pct(digits: int, signed: bool = False) -> Callable[[Any], str]:
    def fmt(v):
        if v is None or (isinstance(v, float) and math.isnan(v)):
            return "---"
        return _clean(f"{100 * v:+.{digits}f}" if signed else f"{100 * v:.{digits}f}")

    return fmt


def _num(digits: int, signed: bool = False) -> Callable[[Any], str]:
    def fmt(v):
        if v is None or (isinstance(v, float) and math.isnan(v)):
            return "---"
        return _clean(f"{v:+.{digits}f}" if signed else f"{v:.{digits}f}")

    return fmt


FORMATS: dict[str, Callable[[Any], str]] = {
    "pct1": _pct(1),
    "pct2": _pct(2),
    "pct3": _pct(3),
    "pct4": _pct(4),
    "spct1": _pct(1, True),
    "spct2": _pct(2, True),
    "spct3": _pct(3, True),
    "f0": _num(0),
    "f1": _num(1),
    "f2": _num(2),
    "f3": _num(3),
    "f4": _num(4),
    "sf1": _num(1, True),
    "sf2": _num(2, True),
    "sf3": _num(3, True),
    "yesno": lambda v: "---" if v is None else ("YES" if v else "no"),
    "str": lambda v: "" if v is None else str(v),
}


@dataclass
class Table:
    """A rendered-agnostic table.

    ``rows`` carry raw values (decimals for rates); ``formats`` name a
    display format per column from :data:`FORMATS`. ``values`` holds named
    headline numbers used for golden comparisons.
    """

    key: str
    title: str
    columns: Sequence[str]
    rows: list[list[Any]]
    formats: Sequence[str] | None = None
    notes: list[str] = field(default_factory=list)
    values: dict[str, Any] = field(default_factory=dict)

    def display_rows(self) -> list[list[str]]:
        fmts = list(self.formats or ["str"] * len(self.columns))
        out = []
        for row in self.rows:
            out.append([_display(v, FORMATS[f]) for v, f in zip(row, fmts)])
        return out


def _display(value, fmt) -> str:
    if isinstance(value, str):
        return value
    return fmt(value)


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return "nan" if math.isnan(v) else repr(float(v))
    if hasattr(v, "item"):
        return _csv_cell(v.item())
    return str(v)


def _csv_escape(s: str) -> str:
    if any(c in s for c in ',"\n'):
        return '"' + s.replace('"', '""') + '"'
    return s


def render_csv(table: Table) -> str:
    """Raw values at full precision plus a display column per field."""
    buf = io.StringIO()
    header = list(table.columns) + [f"{c} [display]" for c in table.columns]
    buf.write(",".join(_csv_escape(h) for h in header) + "\n")
    for raw, shown in zip(table.rows, table.display_rows()):
        cells = [_csv_cell(v) for v in raw] + shown
        buf.write(",".join(_csv_escape(c) for c in cells) + "\n")
    return buf.getvalue()


def render_text(table: Table) -> str:
    shown = table.display_rows()
    cols = list(table.columns)
    widths = [len(c) for c in cols]
    for row in shown:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    lines = [table.title, ""]
    lines.append("  ".join(c.ljust(w) if i == 0 else c.rjust(w) for i, (c, w) in enumerate(zip(cols, widths))))
    lines.append("  ".join("-" * w for w in widths))
    for row in shown:
        lines.append("  ".join(c.ljust(w) if i == 0 else c.rjust(w) for i, (c, w) in enumerate(zip(row, widths))))
    for note in table.notes:
        lines.append(f"note: {note}")
    return "\n".join(line.rstrip() for line in lines) + "\n"


def render_markdown(table: Table) -> str:
    shown = table.display_rows()
    lines = [f"**{table.title}**", "", "| " + " | ".join(table.columns) + " |"]
    lines.append("|" + "|".join(["---"] + ["---:"] * (len(table.columns) - 1)) + "|")
    for row in shown:
        lines.append("| " + " | ".join(row) + " |")
    lines.extend(f"\n_{n}_" for n in table.notes)
    return "\n".join(lines) + "\n"


def emit_table(table: Table, out_dir: str | Path | None = None) -> tuple[str, str]:
    """Return (csv, text); when ``out_dir`` is given also write ``<key>.csv`` and ``<key>.txt``."""
    csv_text, txt = render_csv(table), render_text(table)
    if out_dir is not None:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{table.key}.csv").write_text(csv_text, encoding="utf-8")
        (out / f"{table.key}.txt").write_text(txt, encoding="utf-8")
    return csv_text, txt
