"""Normalized numbers C(d) by genus, and how tightly they hug 1/pi.

    python3 demos/genus_tables.py
"""

import mpmath

from bgw import compute_C
from bgw.harness.tables import cli_table
from bgw.partitions import enumerate_partitions

for g in range(2, 6):
    print(cli_table(g).render())
    print()

# the spread of C over all partitions of g-1 shrinks like 1/g
print(" g    min C          max C          g*(max-min)")
for g in range(4, 21, 4):
    vals = [compute_C(d) for d in enumerate_partitions(g - 1)]
    lo, hi = min(vals), max(vals)
    print(f"{g:2d}  {float(lo):.10f}  {float(hi):.10f}  {float(g * (hi - lo)):.6f}")
print(f"1/pi = {mpmath.nstr(1 / mpmath.pi, 11)}")
