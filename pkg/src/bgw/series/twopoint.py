"""Two-point defect series W_d(X), the polynomials A_j(d), and c-hat_k(e_d)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from ..exactnum import DomainError, double_factorial, odd_double_factorial, stirling2
from .core import (
    AsymptoticSeries,
    RationalPolynomial,
    inverse_pochhammer_series,
    linear_factor_series,
    ratio_series,
    solve_shift,
)


class RecursionError_(ArithmeticError):
    """A_j(d) failed one of its defining recursions."""


def _poch_poly(shift: Fraction, length: int) -> RationalPolynomial:
    """(d + shift)_length as a polynomial in d."""
    out = RationalPolynomial([1])
    for i in range(length):
        out = out * RationalPolynomial([shift + i, 1])
    return out


def _poch_int(a: int, b: int) -> int:
    out = 1
    for i in range(b):
        out *= a + i
    return out


def _a_closed(j: int) -> RationalPolynomial:
    if j == 0:
        return RationalPolynomial()
    total = RationalPolynomial()
    for l in range((j + 1) // 2 + 1):
        c = Fraction(double_factorial(2 * l - 1)) / (8**l * factorial(l) ** 3) * _poch_int(j - 2 * l, 2 * l)
        if c:
            total = total + _poch_poly(Fraction(3, 2) - l, j - 1) * c
    return total * ((-1) ** (j - 1) * factorial(j - 1))


def a_j_residuals(j: int) -> tuple[RationalPolynomial, RationalPolynomial]:
    """Residuals of the two recursions linking A_j and A_{j+1}; both must vanish."""
    d = RationalPolynomial.x()
    aj, aj1 = _a_closed(j), _a_closed(j + 1)
    aj_s, aj1_s = aj.shift(1), aj1.shift(1)
    r1 = (
        aj1_s - aj1
        - (d + j + 1) * (2 * d + j + 2) * aj * 2
        + ((2 * d + j + 3) * (2 * d + 3) + j * j) * aj_s
    )
    r2 = aj_s * (-(j**3)) + (2 * d - j + 3) * aj1_s - (2 * d + j + 3) * aj1
    return r1, r2


@lru_cache(maxsize=None)
def a_j_poly(j: int) -> RationalPolynomial:
    """A_j(d) from its closed form, checked against both recursions."""
    if j < 1:
        raise DomainError("A_j is defined for j >= 1")
    if j == 1 and _a_closed(1) != RationalPolynomial([1]):
        raise RecursionError_("A_1 must be identically 1")
    r1, r2 = a_j_residuals(j - 1)
    if r1.coeffs or r2.coeffs:
        raise RecursionError_(f"A_{j} violates its recursion")
    return _a_closed(j)


def _w_prefactor(d: int) -> Fraction:
    return Fraction(odd_double_factorial(d) ** 3, 2 ** (d + 1) * factorial(d))


def w_d_closed(d: int, order: int) -> AsymptoticSeries:
    """W_d(X) summed over inverse Pochhammer symbols 1/(X-2d-j+1)_{2d+2j}.

    Term j starts at X^-(2d+2j), so j <= (order - 2d)/2 is enough.
    """
    if d < 1:
        raise DomainError("w_d_closed needs d >= 1")
    out = AsymptoticSeries.zero(order)
    j = 1
    while 2 * d + 2 * j <= order:
        coef = a_j_poly(j)(d) / (d + j)
        out = out + inverse_pochhammer_series(-2 * d - j + 1, 2 * d + 2 * j, order) * coef
        j += 1
    return out * _w_prefactor(d)


def chat_k_ed(k: int, d: int) -> Fraction:
    """c-hat_k at p = e_d via the Stirling-number formula.

    The formula covers k >= 1; c-hat_0 is identically 1.
    """
    if d < 1:
        raise DomainError("chat_k_ed needs d >= 1")
    if k == 0:
        return Fraction(1)
    total = Fraction(0)
    for j in range(1, k // 2 - d + 1):
        inner = sum(
            comb(k - 1, l) * (-j) ** l * stirling2(k - l - 1, 2 * d + 2 * j - 1)
            for l in range(k - 2 * d - 2 * j + 1)
        )
        total += a_j_poly(j)(d) / (d + j) * inner
    return -_w_prefactor(d) * total


def w_truncated(n_terms: int, d: int, x) -> Fraction:
    """W(N; d, X): the first N terms of the inverse-Pochhammer sum at a number X."""
    x = Fraction(x)
    if n_terms < 1:
        raise DomainError("N must be positive")
    if x - 2 * d <= n_terms:
        raise DomainError("W(N; d, X) needs X - 2d > N")
    total = Fraction(0)
    for j in range(1, n_terms + 1):
        poch = Fraction(1)
        for i in range(2 * d + 2 * j):
            poch *= x - 2 * d - j + 1 + i
        total += a_j_poly(j)(d) / (d + j) / poch
    return _w_prefactor(d) * total


def _gamma_ratio_series(factors, h: int, power_shift: Fraction, order: int) -> AsymptoticSeries:
    """Series of a Gamma ratio G with G(X+h)/G(X) = prod factors and G ~ (X/2)^a."""
    lead, power, ratio = ratio_series(factors, order + 1)
    assert lead == 1 and power == 0
    alpha, sigma = solve_shift(ratio, h, order)
    if alpha != power_shift:
        raise AssertionError(f"growth exponent {alpha} != {power_shift}")
    return sigma


def wd_difference_rhs(d: int, order: int) -> AsymptoticSeries:
    """Expansion of W_d(X) - W_d(X+2) from the Gamma-ratio formula.

    G(X) = Gamma((X+1)/2-d)^3 Gamma((X+3)/2) / (Gamma((X+4)/2)^3 Gamma((X+2)/2-d))
    behaves like (X/2)^(-2d-4) sigma(X) with
    G(X+2)/G(X) = (X+1-2d)^3 (X+3) / ((X+4)^3 (X+2-2d)).
    """
    a = -2 * d - 4
    sigma = _gamma_ratio_series([(1, 1 - 2 * d, 3), (1, 3, 1), (1, 4, -3), (1, 2 - 2 * d, -1)], 2, a, order)
    pref = Fraction(odd_double_factorial(d) ** 3, 8 ** (d + 1) * factorial(d)) * Fraction(2) ** (-a)
    # (X - d + 3/2) X^(-2d-4) sigma = X^(-2d-3) (1 + (3/2-d)/X) sigma
    if 2 * d + 3 > order:
        return AsymptoticSeries.zero(order)
    lin = AsymptoticSeries([1, Fraction(3, 2) - d], order)
    core = (lin * sigma).truncate(order - (2 * d + 3))
    return core.times_x_power(2 * d + 3) * pref


def recwd_rhs(d: int, order: int) -> AsymptoticSeries:
    """Expansion of W_{d-1}(X) - W_d(X) for d >= 2 from the Gamma-ratio formula.

    H(X) = Gamma((X+3)/2) Gamma((X+1)/2-d)^3 / (Gamma(X/2+1)^3 Gamma(X/2+1-d))
    behaves like (X/2)^(-2d-1) sigma(X) with
    H(X+2)/H(X) = (X+3)(X+1-2d)^3 / ((X+2)^3 (X+2-2d)).
    """
    if d < 2:
        raise DomainError("recwd_rhs needs d >= 2")
    a = -2 * d - 1
    sigma = _gamma_ratio_series([(1, 3, 1), (1, 1 - 2 * d, 3), (1, 2, -3), (1, 2 - 2 * d, -1)], 2, a, order)
    pref = Fraction(odd_double_factorial(d - 1) ** 3, 8**d * factorial(d)) * Fraction(2) ** (-a)
    # (X/2 - 2d) X^(-2d-1) sigma = (1/2) X^(-2d) (1 - 4d/X) sigma
    lin = AsymptoticSeries([Fraction(1, 2), -2 * d], order)
    if 2 * d > order:
        return AsymptoticSeries.zero(order)
    core = (lin * sigma).truncate(order - 2 * d)
    return core.times_x_power(2 * d) * pref


def w_powers_leading(d: int) -> tuple[Fraction, Fraction, Fraction]:
    """First three coefficients of W_d in powers of X, from the closed expression."""
    lead = Fraction(odd_double_factorial(d) ** 3, 2 ** (d + 1) * factorial(d + 1))
    return (
        lead,
        lead * (2 * d - 1) * (d + 1),
        lead * Fraction((2 * d + 3) * (d + 1) * (6 * d**3 + 7 * d**2 - 8 * d + 1), 6 * (d + 2)),
    )


__all__ = [
    "a_j_poly",
    "a_j_residuals",
    "w_d_closed",
    "chat_k_ed",
    "w_truncated",
    "wd_difference_rhs",
    "recwd_rhs",
    "w_powers_leading",
    "linear_factor_series",
]
