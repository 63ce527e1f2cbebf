"""The 1/X expansion: gamma envelope, universal polynomials c_k, and W-series.

    python3 demos/asymptotics.py
"""

from bgw.resolvent import C_twopoint
from bgw.series import c_poly, chat_poly, gamma_series, p_lambda, w_d_closed, w_lambda

print("pi*gamma(X) =", gamma_series(6).render())
print()
for k in range(8):
    print(f"c_{k} = {c_poly(k, 10)}".ljust(60), f"chat_{k} = {chat_poly(k, 10)}")
print()

# C(1, n) is an exact rational function of X = 2n + 4; the two-point closed form reaches large n
print("P_1(X) =", p_lambda((1,)).render())
for n in (5, 50, 500):
    print(f"  C(1,{n}) = {float(C_twopoint(1, n)):.15f}")
print()

print("W_1(X) =", w_d_closed(1, 9).render())
print("W_(1,1)(X) =", w_lambda((1, 1), 10).render())
