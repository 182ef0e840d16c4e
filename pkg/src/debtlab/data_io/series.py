"""Dated observation vectors and CSV snapshot ingestion.

CSV schema: a one-line header followed by ``date,value`` rows. Dates are
``YYYY``, ``YYYY-MM`` or ``YYYY-MM-DD`` (the day is ignored and must be
01, as in FRED downloads). Empty cells, ``.``, ``NA`` and ``NaN`` are
missing values. Frequency is inferred from the spacing of dates.
"""

from __future__ import annotations

import csv
import math
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np

MISSING = {"", ".", "na", "nan", "n/a", "#n/a", "null"}
FREQ_STEP = {"A": 12, "Q": 3, "M": 1}
_DATE = re.compile(r"^(\d{4})(?:-(\d{2})(?:-(\d{2}))?)?$")


class CsvFormatError(ValueError):
    def __init__(self, path, line: int, message: str):
        self.path = str(path)
        self.line = line
        super().__init__(f"{path}:{line}: {message}")


def month_index(label: str) -> int:
    """Months since year 0 for a date label; bare years map to January."""
    m = _DATE.match(label.strip())
    if not m:
        raise ValueError(f"unrecognized date {label!r}")
    year, month, day = m.group(1), m.group(2), m.group(3)
    mo = int(month) if month else 1
    if not 1 <= mo <= 12:
        raise ValueError(f"month out of range in {label!r}")
    if day is not None and int(day) != 1:
        raise ValueError(f"only first-of-period dates are supported, got {label!r}")
    return int(year) * 12 + (mo - 1)


def label_for(index: int, freq: str) -> str:
    year, month = divmod(index, 12)
    return f"{year:04d}" if freq == "A" else f"{year:04d}-{month + 1:02d}"


def infer_frequency(indices: Iterable[int], year_only: bool = False) -> str:
    idx = list(indices)
    if year_only or len(idx) < 2:
        return "A" if year_only or not idx or idx[0] % 12 == 0 else "M"
    step = min(b - a for a, b in zip(idx, idx[1:]))
    if step <= 0:
        raise ValueError("dates must be strictly increasing")
    for freq, s in (("M", 1), ("Q", 3), ("A", 12)):
        if step == s:
            if any((b - a) % s for a, b in zip(idx, idx[1:])):
                raise ValueError("irregular date spacing")
            return freq
    raise ValueError(f"unsupported date spacing of {step} months")


@dataclass(frozen=True)
class TimeSeries:
    """Single-frequency series. Missing observations are NaN.

    ``index`` holds month ordinals (year*12 + month-1); annual series use
    the January ordinal. ``meta`` records units, provenance and notes.
    """

    name: str
    index: tuple[int, ...]
    values: np.ndarray
    freq: str
    meta: Mapping = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.freq not in FREQ_STEP:
            raise ValueError(f"unknown frequency {self.freq!r}")
        if len(self.index) != len(self.values):
            raise ValueError("index and values differ in length")
        if any(b <= a for a, b in zip(self.index, self.index[1:])):
            raise ValueError("dates must be strictly increasing")
        vals = np.asarray(self.values, dtype=float)
        if np.any(np.isinf(vals)):
            raise ValueError("values must be finite or NaN")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.index)

    @property
    def dates(self) -> list[str]:
        return [label_for(i, self.freq) for i in self.index]

    @property
    def years(self) -> np.ndarray:
        return np.array([i // 12 for i in self.index])

    @property
    def n_missing(self) -> int:
        return int(np.isnan(self.values).sum())

    @classmethod
    def annual(cls, name: str, years: Iterable[int], values: Iterable[float], **meta) -> "TimeSeries":
        return cls(name, tuple(int(y) * 12 for y in years), np.asarray(list(values), float), "A", meta)

    @classmethod
    def monthly(cls, name: str, start: str, values: Iterable[float], **meta) -> "TimeSeries":
        vals = np.asarray(list(values), float)
        s = month_index(start)
        return cls(name, tuple(range(s, s + len(vals))), vals, "M", meta)

    def as_dict(self) -> dict[int, float]:
        return dict(zip(self.index, self.values))

    def value(self, label: str) -> float:
        i = month_index(label)
        return float(self.as_dict().get(i, np.nan))

    def window(self, start: str | None = None, end: str | None = None) -> "TimeSeries":
        lo = month_index(start) if start else -math.inf
        hi = month_index(end) if end else math.inf
        keep = [j for j, i in enumerate(self.index) if lo <= i <= hi]
        return TimeSeries(self.name, tuple(self.index[j] for j in keep), self.values[keep], self.freq, self.meta)

    def dropna(self) -> "TimeSeries":
        keep = ~np.isnan(self.values)
        return TimeSeries(
            self.name, tuple(np.array(self.index)[keep].tolist()), self.values[keep], self.freq, self.meta
        )

    def to_annual(self, how: str = "mean") -> "TimeSeries":
        """Aggregate to calendar years; years with any missing period are NaN."""
        if self.freq == "A":
            return self
        per_year = 12 // FREQ_STEP[self.freq]
        groups: dict[int, list[float]] = {}
        for i, v in zip(self.index, self.values):
            groups.setdefault(i // 12, []).append(v)
        years = sorted(groups)
        out = []
        for y in years:
            vals = np.array(groups[y])
            if len(vals) < per_year or np.any(np.isnan(vals)):
                out.append(np.nan)
            elif how == "mean":
                out.append(float(vals.mean()))
            elif how == "last":
                out.append(float(vals[-1]))
            else:
                raise ValueError(f"unknown aggregation {how!r}")
        meta = dict(self.meta, aggregated=f"{how} of {self.freq}")
        return TimeSeries.annual(self.name, years, out, **meta)

    def shift(self, periods: int = 1) -> "TimeSeries":
        """Lag by ``periods`` steps on the series' own calendar."""
        step = FREQ_STEP[self.freq]
        return TimeSeries(
            self.name, tuple(i + periods * step for i in self.index), self.values, self.freq, self.meta
        )

    def rename(self, name: str, **meta) -> "TimeSeries":
        return TimeSeries(name, self.index, self.values, self.freq, dict(self.meta, **meta))


def align(*series: TimeSeries) -> tuple[tuple[int, ...], list[np.ndarray]]:
    """Common dates (all non-missing) and the matching value arrays."""
    if not series:
        return (), []
    freqs = {s.freq for s in series}
    if len(freqs) != 1:
        raise ValueError(f"cannot align mixed frequencies {sorted(freqs)}")
    maps = [s.as_dict() for s in series]
    common = sorted(set.intersection(*(set(m) for m in maps)))
    common = [i for i in common if all(not np.isnan(m[i]) for m in maps)]
    return tuple(common), [np.array([m[i] for i in common]) for m in maps]


def combine(name: str, parents: list[TimeSeries], fn, formula: str) -> TimeSeries:
    """Pointwise function of parents on the intersection of their supports."""
    idx, arrays = align(*parents)
    vals = fn(*arrays) if idx else np.array([])
    return TimeSeries(
        name, idx, np.asarray(vals, float), parents[0].freq,
        {"parents": tuple(p.name for p in parents), "formula": formula},
    )


def load_csv(path, name: str | None = None) -> TimeSeries:
    path = Path(path)
    idx: list[int] = []
    vals: list[float] = []
    year_only = True
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise CsvFormatError(path, 1, "empty file (expected a header line)") from None
        if len(header) < 2:
            raise CsvFormatError(path, 1, "header must name two columns")
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != 2:
                raise CsvFormatError(path, lineno, f"expected 2 fields, got {len(row)}")
            date, raw = row[0].strip(), row[1].strip()
            try:
                i = month_index(date)
            except ValueError as exc:
                raise CsvFormatError(path, lineno, str(exc)) from None
            if "-" in date:
                year_only = False
            if idx and i <= idx[-1]:
                raise CsvFormatError(path, lineno, "dates are not strictly increasing")
            if raw.lower() in MISSING:
                v = math.nan
            else:
                try:
                    v = float(raw)
                except ValueError:
                    raise CsvFormatError(path, lineno, f"non-numeric value {raw!r}") from None
                if not math.isfinite(v):
                    raise CsvFormatError(path, lineno, f"non-finite value {raw!r}")
            idx.append(i)
            vals.append(v)
    try:
        freq = infer_frequency(idx, year_only=year_only)
    except ValueError as exc:
        raise CsvFormatError(path, 1, str(exc)) from None
    return TimeSeries(name or path.stem, tuple(idx), np.array(vals, float), freq, {"source": path.name})


def write_csv(series: TimeSeries, path) -> None:
    """Write ``date,value`` with 15 significant digits; NaN is written as '.'."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        fh.write("date,value\n")
        for d, v in zip(series.dates, series.values):
            fh.write(f"{d},{'.' if np.isnan(v) else format(v, '.15g')}\n")


FORWARD_FILL_NOTE = (
    "monthly values repeat the annual figure; sign changes can appear up to "
    "12 months late relative to a true monthly series"
)


def forward_fill_annual_to_monthly(series: TimeSeries) -> TimeSeries:
    if series.freq != "A":
        raise ValueError("expected an annual series")
    idx, vals = [], []
    for i, v in zip(series.index, series.values):
        idx.extend(range(i, i + 12))
        vals.extend([v] * 12)
    meta = dict(series.meta, note=FORWARD_FILL_NOTE, parents=(series.name,), formula="forward-fill A->M")
    return TimeSeries(series.name, tuple(idx), np.array(vals), "M", meta)
