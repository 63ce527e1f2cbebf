"""Subexponential corrections b_k(n) in 1 - C-hat(d^n) ~ Y_n(d)(1 + b_1/d + b_2/d^2 + ...).

Everything is a series in 1/d.  With X = n(2d+1) the j-th term of
W(N; d, X) divided by the first one is a rational function of d of order
d^-(j-1), and the first term over Y_n(d) has a ratio under d -> d+1 that is
rational up to the factor (1 + 1/d)^(1/2).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import mpmath

from ..exactnum import DomainError
from .core import AsymptoticSeries, RationalPolynomial, linear_factor_series, ratio_series, rational_series, solve_shift
from .twopoint import a_j_poly


def q_base(n: int) -> Fraction:
    """(n-1)^(n-1) / n^n."""
    return Fraction((n - 1) ** (n - 1), n**n)


def _first_term_factors(n: int) -> tuple[list[tuple], Fraction]:
    """Linear factors of T_1(d+1)/T_1(d) and the loose constant 1/2."""
    factors = [(2, 3, 3), (1, 2, -1)]
    factors += [(2 * (n - 1), (n - 1) + i, 1) for i in range(1, 2 * n - 1)]
    factors += [(2 * n, n + i, -1) for i in range(2, 2 * n + 2)]
    return factors, Fraction(1, 2)


@lru_cache(maxsize=None)
def first_term_sigma(n: int, order: int) -> AsymptoticSeries:
    """Unit series of n T_1(d) / Y_n(d) in 1/d (leading constant normalized to 1).

    T_1 = (2d+1)!!^3 ((n-1)(2d+1))! / (2^(d+1) (d+1)! (n(2d+1)+1)!)
    Y_n(d+1)/Y_n(d) = q^2 (1 + 1/d)^(-1/2), q = (n-1)^(n-1)/n^n.
    """
    factors, const = _first_term_factors(n)
    lead, power, unit = ratio_series(factors, order + 1)
    if power != 0 or lead * const != q_base(n) ** 2:
        raise AssertionError("first-term ratio does not match the exponential rate q^2")
    ratio = unit * linear_factor_series(1, Fraction(1, 2), order + 1)
    alpha, sigma = solve_shift(ratio, 1, order)
    if alpha != 0:
        raise AssertionError(f"unexpected power d^{alpha} in the first term")
    return sigma


def _term_ratio(n: int, j: int, order: int) -> AsymptoticSeries:
    """T_j / T_1 as a series in 1/d."""
    d = RationalPolynomial.x()
    num = a_j_poly(j) * (d + 1)
    den = d + j
    for i in range(j - 1):
        den = den * (d * (2 * n) + (n + 2 + i))
        den = den * (d * (2 * (n - 1)) + (n - j + 1 + i))
    return rational_series(num, den, order)


@lru_cache(maxsize=None)
def _b_series(n: int, order: int) -> AsymptoticSeries:
    total = AsymptoticSeries.zero(order)
    for j in range(1, order + 2):
        total = total + _term_ratio(n, j, order)
    return first_term_sigma(n, order) * total


def subexp_b_series(n: int, order: int) -> list[Fraction]:
    """[1, b_1(n), ..., b_order(n)]."""
    if n < 2:
        raise DomainError("subexp_b_series needs n >= 2")
    if order < 0:
        raise DomainError("order must be nonnegative")
    return list(_b_series(n, order).coeffs)


def l_series(n: int, order: int) -> AsymptoticSeries:
    """L_n = 24 log(1 + b_1 x + b_2 x^2 + ...) with x = 1/d."""
    return _b_series(n, order).log() * 24


def l_closed(n: int) -> tuple[Fraction, Fraction, Fraction]:
    """Closed forms of the first three coefficients of L_n."""
    return (
        Fraction(-11 * n**2 - n + 7, n**2 - n),
        Fraction(14 * n**3 - 16 * n**2 + n + 7, 2 * n * (n - 1) ** 2),
        Fraction(
            -721 * n**6 + 1803 * n**5 - 1953 * n**4 + 901 * n**3 - 243 * n**2 + 93 * n - 31,
            120 * n**3 * (n - 1) ** 3,
        ),
    )


def y_n(n: int, d, dps: int = 50):
    """Y_n(d) without the (1/2)^{delta_{n,2}} factor, numerically."""
    with mpmath.workdps(dps):
        d = mpmath.mpf(d)
        q = mpmath.mpf(n - 1) ** (n - 1) / mpmath.mpf(n) ** n
        return mpmath.sqrt(4 * (n - 1) / (mpmath.pi * n * d)) * q ** (2 * d + 1)


def first_term_constant(n: int, d: int, dps: int = 60):
    """n T_1(d) / (Y_n(d) sigma(d)) numerically; tends to 1 as d grows."""
    with mpmath.workdps(dps):
        dd = mpmath.mpf(d)
        t1 = (
            mpmath.fac2(2 * d + 1) ** 3
            * mpmath.factorial((n - 1) * (2 * d + 1))
            / (2 ** (d + 1) * mpmath.factorial(d + 1) * mpmath.factorial(n * (2 * d + 1) + 1))
        )
        sigma = first_term_sigma(n, 8)
        s = mpmath.fsum(mpmath.mpf(c.numerator) / c.denominator / dd**k for k, c in enumerate(sigma.coeffs))
        return n * t1 / (y_n(n, d, dps) * s)
