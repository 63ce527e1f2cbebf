"""kappa_1 brackets, their normalized values and the volume polynomials they assemble into.

    python3 demos/kappa_volumes.py
"""

from bgw.harness.tables import kappa_table
from bgw.kappa import gprs_ratio, kappa_number, sw_volume

for m in range(1, 6):
    print(f"<kappa^{m}> = {kappa_number(m)}")
print()
print(kappa_table(5).render())
print()
for g, n in [(2, 0), (2, 1), (3, 1), (3, 2)]:
    print(f"V_({g},{n}) =", sw_volume(g, n))
print()
# exact bracket against the conjectured large-genus growth
for g in range(6, 15, 2):
    print(f"g={g:2d}  ratio {float(gprs_ratio(g)):.6f}")
