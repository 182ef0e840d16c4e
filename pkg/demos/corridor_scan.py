"""Scan the repression bias and show that corridor width and debt drift move together.

A positive width means the debt ratio falls next year; a negative one means it rises.
"""
import numpy as np

from debtlab.core_model import BASELINE
from debtlab.corridor import OperatingPoint, read_corridor

c = BASELINE
print(f"{'bias (%)':>9}{'width (pp)':>12}{'next-year db (pp)':>19}  verdict")
for eps in np.arange(0.0, 1.01, 0.125):
    bias = eps / 100
    reading = read_corridor(c, OperatingPoint(bias, c.g_n_star))
    r = c.pi - bias
    db = (r - c.g_n_star) * c.b0 + c.d - c.s
    print(f"{eps:>9.3f}{100 * reading.width:>12.4f}{100 * db:>19.4f}  {reading.verdict}")

edge = read_corridor(c)
print(f"\nbias that balances the budget identity: {100 * edge.epsilon_star:.4f}%")
print(f"growth needed at today's bias:        {100 * edge.g_star_min:.4f}%")
