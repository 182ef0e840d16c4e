"""Run two empirical blocks on a freshly generated synthetic bundle.

The bundle is invented data; this shows the pipeline, not any finding.
"""
import tempfile
import warnings

from debtlab.data_io.catalog import load_catalog
from debtlab.data_io.emit import render_text
from debtlab.data_io.synthetic import write_demo_bundle
from debtlab.econ_tables import econ_tables

with tempfile.TemporaryDirectory() as tmp:
    write_demo_bundle(tmp, seed=11)
    cat = load_catalog(tmp)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for table in econ_tables(cat, ["chow", "lp"]):
            print(render_text(table))
