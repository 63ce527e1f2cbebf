"""Matrix-resolvent formulas for BGW numbers.

A 2x2 matrix is a 4-tuple ``(m11, m12, m21, m22)`` of Fractions.  The
resolvent M(lambda) = sum_{k >= -1} A_k lambda^{-k} is handled coefficientwise.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, gcd, lcm
from typing import Sequence

import mpmath

from .exactnum import double_factorial, odd_double_factorial

Mat = tuple  # (a, b, c, d) for [[a, b], [c, d]]

ZERO_MAT: Mat = (Fraction(0),) * 4


class TruncationError(RuntimeError):
    """Laurent data was too short for the requested coefficients."""


def mat_mul(x: Mat, y: Mat) -> Mat:
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def mat_add(x: Mat, y: Mat) -> Mat:
    return tuple(p + q for p, q in zip(x, y))


def mat_scale(s, x: Mat) -> Mat:
    return tuple(s * p for p in x)


def mat_trace(x: Mat) -> Fraction:
    return x[0] + x[3]


def f_coeff(k: int) -> Fraction:
    """f(k) = (2k-1)!!^3 / (2^(3k) (k+1)!)."""
    return double_factorial(2 * k - 1) ** 3 / (Fraction(2) ** (3 * k) * factorial(k + 1))


@lru_cache(maxsize=None)
def a_matrix(k: int) -> Mat:
    """A_k = f(k) R(k), the coefficient of lambda^(-k) in M(lambda)."""
    if k < -1:
        return ZERO_MAT
    kk = Fraction(k)
    r = (
        kk * (k + 1),
        kk + 1,
        -(8 * kk**3 + 12 * kk**2 + 4 * kk + 1) / 8,
        -kk * (k + 1),
    )
    return mat_scale(f_coeff(k), r)


def trace_a(ks: Sequence[int]) -> Fraction:
    """a_{k_1..k_n} = tr(A_{k_1} ... A_{k_n}); zero if some k_i <= -2."""
    if any(k < -1 for k in ks):
        return Fraction(0)
    prod = a_matrix(ks[0])
    for k in ks[1:]:
        prod = mat_mul(prod, a_matrix(k))
    return mat_trace(prod)


def trace_a2(k1: int, k2: int) -> Fraction:
    """Closed form of a_{k1,k2}.

    The constant term enters with a plus sign; this matches tr(A_k1 A_k2)
    expanded symbolically.
    """
    if k1 < -1 or k2 < -1:
        return Fraction(0)
    s = Fraction(k1 + k2)
    return -f_coeff(k1) * f_coeff(k2) * (
        ((k1 - k2) ** 2 + s / 2) * (k1 + 1) * (k2 + 1) + (s + 2) / 8
    )


def trace_a3(k1: int, k2: int, k3: int) -> Fraction:
    """Closed form of a_{k1,k2,k3}."""
    if min(k1, k2, k3) < -1:
        return Fraction(0)
    return (
        f_coeff(k1) * f_coeff(k2) * f_coeff(k3)
        * (k1 - k2) * (k2 - k3) * (k3 - k1)
        * ((k1 + 1) * (k2 + 1) * (k3 + 1) + Fraction(1, 8))
    )


def min_count(e: Sequence[int]) -> int:
    """M(e) = max(0, min e_i)."""
    return max(0, min(e))


def _compositions(total: int, n: int, low: int = -1):
    """All k in Z^n with k_i >= low and sum total."""
    if n == 1:
        if total >= low:
            yield (total,)
        return
    for k in range(low, total - low * (n - 1) + 1):
        for rest in _compositions(total - k, n - 1, low):
            yield (k,) + rest


def omega(d: Sequence[int], sigma: Sequence[int], k: Sequence[int]) -> int:
    """Number of j_n >= 0 solving the linear system for (d, sigma, k).

    sigma is 0-based with sigma[n-1] = n-1.
    """
    n = len(d)
    plus = minus = None
    acc = 0
    for r in range(n):
        acc += d[sigma[r]] - k[r]
        if sigma[(r + 1) % n] > sigma[r]:
            plus = acc if plus is None else min(plus, acc)
        else:
            minus = -acc if minus is None else min(minus, -acc)
    return max(0, plus + minus)


def _sign_and_ascents(sigma: Sequence[int]) -> int:
    n = len(sigma)
    ups = sum(1 for r in range(n) if sigma[(r + 1) % n] > sigma[r])
    return -1 if ups % 2 == 0 else 1  # (-1)^(|S+|+1)


def B_npoint(d: Sequence[int]) -> Fraction:
    """B(d) for n >= 2 by summing over permutations fixing n and k-vectors."""
    d = tuple(d)
    n = len(d)
    if n < 2:
        raise ValueError("B_npoint needs n >= 2; use the one-point formula")
    total = sum(d)
    if total < -n:
        return Fraction(0)
    ks = [k for k in _compositions(total, n)]
    traces = {}
    out = Fraction(0)
    for head in permutations(range(n - 1)):
        sigma = head + (n - 1,)
        sign = _sign_and_ascents(sigma)
        part = Fraction(0)
        for k in ks:
            w = omega(d, sigma, k)
            if w:
                a = traces.get(k)
                if a is None:
                    a = traces[k] = trace_a(k)
                part += w * a
        out += sign * part
    return out


def B_threepoint(d1: int, d2: int, d3: int) -> Fraction:
    out = Fraction(0)
    for k1, k2, k3 in _compositions(d1 + d2 + d3, 3):
        m = min_count((d1 - k1, d1 + d2 - k1 - k2))
        if m:
            out += m * trace_a3(k1, k2, k3)
    return -2 * out


def B_fourpoint(d1: int, d2: int, d3: int, d4: int) -> Fraction:
    out = Fraction(0)
    for k1, k2, k3, k4 in _compositions(d1 + d2 + d3 + d4, 4):
        m = (
            min_count((d1 - k1, d1 + d2 - k1 - k2, k4 - d4))
            - min_count((d1 - k2, d1 + d2 - k2 - k3, d1 + d3 - k1 - k2, k4 - d4))
            - min_count((d1 - k1, d2 - k3, k2 - d3, k4 - d4))
        )
        if m:
            out += m * trace_a((k1, k2, k3, k4))
    return 2 * out


def B_twopoint_resolvent(d1: int, d2: int) -> Fraction:
    """Two-point value from the closed form of a_{k1,k2}."""
    out = Fraction(0)
    for k1 in range(-1, d1 + d2 + 2):
        m = min_count((d1 - k1,))
        if m:
            out += m * trace_a2(k1, d1 + d2 - k1)
    return out


def f1_coefficient(d: int) -> Fraction:
    """Coefficient of lambda^(-d-1) in the one-point series."""
    return Fraction(odd_double_factorial(d) ** 3, 8 ** (d + 1) * factorial(d + 1) * (2 * d + 1))


def C_onepoint(k: int) -> Fraction:
    """C((k)) = g binom(2g-1, g)^2 / 4^(2g-1), g = k+1."""
    from math import comb

    g = k + 1
    return Fraction(g * comb(2 * g - 1, g) ** 2, 4 ** (2 * g - 1))


def _F(h: int) -> Fraction:
    return double_factorial(2 * h - 1) ** 3 / (Fraction(2) ** (3 * h) * factorial(h))


def twopoint_sum(d1: int, d2: int) -> Fraction:
    """sum_{h=0}^{d1} (g - 2h) F_h F_{g-h} with g = d1 + d2 + 1."""
    g = d1 + d2 + 1
    return sum((Fraction(g - 2 * h) * _F(h) * _F(g - h) for h in range(d1 + 1)), Fraction(0))


def B_twopoint(d1: int, d2: int) -> Fraction:
    return twopoint_sum(d1, d2) / (d1 + d2 + 1)


def C_twopoint(d1: int, d2: int) -> Fraction:
    g = d1 + d2 + 1
    return Fraction(2 ** (2 * g), factorial(2 * g)) * twopoint_sum(d1, d2)


def C_twopoint_halfint(d1, d2, digits: int = 50) -> mpmath.mpf:
    """Two-point C with F_h continued through Gamma functions.

    d2 (and so g) may be a half-integer; h still runs over 0..d1.
    """
    with mpmath.workdps(digits + 10):
        if int(d1) != d1 or d1 < 0:
            raise ValueError("d1 must be a nonnegative integer")
        g = _to_mpf(d1) + _to_mpf(d2) + 1
        norm = mpmath.pi ** mpmath.mpf(1.5)

        def F(h):
            return mpmath.gamma(h + mpmath.mpf(0.5)) ** 3 / (norm * mpmath.gamma(h + 1))

        s = mpmath.fsum((g - 2 * h) * F(h) * F(g - h) for h in range(int(d1) + 1))
        out = mpmath.power(2, 2 * g) / mpmath.gamma(2 * g + 1) * s
    return out


def _to_mpf(x):
    x = Fraction(x)
    return mpmath.mpf(x.numerator) / x.denominator


# --- M_{m,d} window -----------------------------------------------------------

def _laurent_m0(depth: int) -> dict[int, Mat]:
    """M(lambda) coefficients for exponents 1 down to -depth."""
    return {-k: a_matrix(k) for k in range(-1, depth + 1)}


def _commutator_series(p: dict[int, Mat], q: dict[int, Mat], depth: int) -> dict[int, Mat]:
    out: dict[int, Mat] = {}
    for e1, x in p.items():
        for e2, y in q.items():
            e = e1 + e2
            if e < -depth:
                continue
            c = mat_add(mat_mul(x, y), mat_scale(-1, mat_mul(y, x)))
            out[e] = mat_add(out[e], c) if e in out else c
    return out


def _scaled(level: dict[int, Mat]) -> tuple[int, list[tuple[int, tuple[int, ...]]]]:
    """(L, [(e, integer matrix)]) with level[e] = matrix / L, exponents descending."""
    den = 1
    for x in level.values():
        for v in x:
            den = lcm(den, v.denominator)
    rows = [(e, tuple(v.numerator * (den // v.denominator) for v in x)) for e, x in level.items()]
    rows.sort(key=lambda r: -r[0])
    return den, rows


def m_series(d: int, m_max: int, depth: int) -> list[dict[int, Mat]]:
    """M_{0..m_max, d} where level k is exact down to exponent -(depth + (m_max-k)(d+1)).

    Truncation argument: M_0 has top exponent 1 and every M_k with k >= 1
    has top exponent <= 0, while (lambda^d M_i)^- only has exponents <= -1.
    A coefficient of [(lambda^d M_i)^-, M_j] at exponent -D therefore needs
    M_i down to -(D + d + 1) and M_j down to -(D + 1).

    Levels are built in integer arithmetic over one common denominator each;
    [x, y] of 2x2 matrices costs six products that way.
    """
    depths = [depth + (m_max - k) * (d + 1) for k in range(m_max + 1)]
    levels = [_laurent_m0(depths[0])]
    scaled = [_scaled(levels[0])]
    for m in range(1, m_max + 1):
        den = 1
        for i in range(m):
            den = lcm(den, scaled[i][0] * scaled[m - 1 - i][0])
        acc: dict[int, list[int]] = {}
        for i in range(m):
            li, pi = scaled[i]
            lj, pj = scaled[m - 1 - i]
            mult = den // (li * lj)
            for e1, (a, b, c, dd) in pi:
                e1 += d
                if e1 > -1:
                    continue
                a_d = a - dd
                floor = -depths[m] - e1
                for e2, (e, f, g, h) in pj:
                    if e2 < floor:
                        break
                    t = b * g - c * f
                    e_h = e - h
                    c12 = a_d * f - e_h * b
                    c21 = e_h * c - a_d * g
                    row = acc.get(e1 + e2)
                    if row is None:
                        acc[e1 + e2] = [t * mult, c12 * mult, c21 * mult]
                    else:
                        row[0] += t * mult
                        row[1] += c12 * mult
                        row[2] += c21 * mult
        den *= m
        common = den
        for row in acc.values():
            for v in row:
                common = gcd(common, v)
        den //= common
        ints = {e: (t // common, c12 // common, c21 // common, -t // common) for e, (t, c12, c21) in acc.items()}
        scaled.append((den, sorted(ints.items(), key=lambda r: -r[0])))
        levels.append({e: tuple(Fraction(v, den) for v in x) for e, x in ints.items()})
    return levels


def B_window(d: int, m: int, a_max: int, b_max: int, check: bool = True) -> dict[tuple[int, int], Fraction]:
    """B(a, b, d^m) for 0 <= a <= a_max, 0 <= b <= b_max.

    The left side of the generating identity is divided by (l1 - l2)^2 by
    multiplying with its expansion in the region |l1| > |l2|:
        1/(l1 - l2)^2 = sum_{j >= 0} (j + 1) l2^j l1^(-j-2).
    With T(l1, l2) the trace sum, the coefficient of l1^(-a-1) l2^(-b-1) is
        m! * sum_{j=0}^{a} (j + 1) T[j + 1 - a, -b - 1 - j],
    the sum stopping at j = a because T has l1-exponent at most 1.  The
    deepest exponent needed is E = a_max + b_max + 1 on both sides.
    """
    if min(d, m, a_max, b_max) < 0:
        raise ValueError("B_window arguments must be nonnegative")
    entry = _window_entry(d, m, a_max + b_max + 1)
    out = {(a, b): entry(a, b) for a in range(a_max + 1) for b in range(b_max + 1)}
    if check:
        for a in range(min(a_max, b_max) + 1):
            for b in range(a + 1, min(a_max, b_max) + 1):
                if out[(a, b)] != out[(b, a)]:
                    raise TruncationError(f"asymmetric window at ({a},{b})")
    return out


def _window_entry(d: int, m: int, depth: int):
    """Closure (a, b) -> B(a, b, d^m) valid for a + b + 1 <= depth."""
    levels = m_series(d, m, depth)

    def coeff(k: int, e: int) -> Mat:
        lvl = levels[k]
        limit = depth + (m - k) * (d + 1)
        if e < -limit:
            raise TruncationError(f"M_{k} needed at exponent {e}, have {-limit}")
        return lvl.get(e, ZERO_MAT)

    tcache: dict[tuple[int, int], Fraction] = {}

    def T(p: int, q: int) -> Fraction:
        key = (p, q)
        if key not in tcache:
            tcache[key] = sum(
                (mat_trace(mat_mul(coeff(k, p), coeff(m - k, q))) for k in range(m + 1)),
                Fraction(0),
            ) - (1 if (m == 0 and p == 0 and q == 0) else 0)
        return tcache[key]

    mf = factorial(m)

    def entry(a: int, b: int) -> Fraction:
        if a + b + 1 > depth:
            raise TruncationError(f"entry ({a},{b}) needs depth {a + b + 1}, have {depth}")
        return mf * sum((Fraction(j + 1) * T(j + 1 - a, -b - 1 - j) for j in range(a + 1)), Fraction(0))

    return entry


def B_power(d: int, n: int) -> Fraction:
    """B(d^n) via the window formula (n >= 2)."""
    if n < 2:
        raise ValueError("B_power needs n >= 2")
    return _window_entry(d, n - 2, 2 * d + 1)(d, d)
