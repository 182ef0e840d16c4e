"""Run every named scenario from the baseline and print the 2030 debt ratio.

Writes scenario_paths.svg next to this script.
"""
from pathlib import Path

from debtlab import presets
from debtlab.core_model import BASELINE
from debtlab.data_io.svg import emit_plot
from debtlab.figures import trajectory_layers
from debtlab.scenarios import run_scenario

trajs = [run_scenario(spec, BASELINE) for spec in presets.SCENARIOS.values()]

print(f"{'scenario':<10}{'2030 b (%)':>12}{'change (pp)':>13}")
for t in trajs:
    b = 100 * t.b
    print(f"{t.name:<10}{b[-1]:>12.1f}{b[-1] - b[0]:>+13.1f}")

out = Path(__file__).with_name("scenario_paths.svg")
out.write_text(emit_plot(trajectory_layers(trajs)))
print(f"wrote {out}")
