"""Painleve XXXIV / II hierarchy coefficients built from the normalized numbers.

    python3 demos/painleve_coefficients.py
"""

import mpmath

from bgw import painleve

for d in range(3):
    print(f"m_{d} =", painleve.m_poly(d))
print()

y = painleve.y_g_seq(8)
print("y_g:", ", ".join(str(y[g]) for g in y.indices()))
print("XXXIV solve (d=1) agrees:", painleve.p34_solve(1, 7).values == y.values)
v = painleve.v_dn_seq(1, 5)
print("v_(1,n):", ", ".join(str(x) for x in v.values))
print("II residual:", painleve.p2_residual(1, v))
print()

with mpmath.workdps(30):
    fit = painleve.asym_ratio(painleve.y_g_seq(150), painleve.y_g_growth)
    print("y_g / growth  ->", mpmath.nstr(fit.constant * mpmath.pi, 12), "/ pi")
    print("first correction", mpmath.nstr(fit.first_correction, 12))
print()
print("genus 40 endpoints:")
print("  C(39)     ~", float(painleve.c_smallest(40)))
print("  C(1^39)   ~", float(painleve.c_biggest(40)))
