"""CSV snapshots, derived indicators, scenario configs and table/plot emission."""

from .catalog import FIXTURE_ENV, PAPER_VINTAGE, SeriesCatalog, derive_series, load_catalog, resolve_fixture_dir
from .config import ConfigError, load_config, loads
from .emit import Table, emit_table, render_csv, render_markdown, render_text
from .series import (
    CsvFormatError,
    TimeSeries,
    align,
    forward_fill_annual_to_monthly,
    load_csv,
    write_csv,
)
from .svg import emit_plot

__all__ = [
    "FIXTURE_ENV",
    "PAPER_VINTAGE",
    "SeriesCatalog",
    "derive_series",
    "load_catalog",
    "resolve_fixture_dir",
    "ConfigError",
    "load_config",
    "loads",
    "Table",
    "emit_table",
    "render_csv",
    "render_markdown",
    "render_text",
    "CsvFormatError",
    "TimeSeries",
    "align",
    "forward_fill_annual_to_monthly",
    "load_csv",
    "write_csv",
    "emit_plot",
]
