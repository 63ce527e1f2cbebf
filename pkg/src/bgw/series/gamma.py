"""The envelope gamma(X) = Gamma(X/2+1)^2 / (pi Gamma((X+1)/2) Gamma((X+3)/2))."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from ..exactnum import DomainError, PiMultiple, odd_double_factorial
from .core import AsymptoticSeries, ratio_series, solve_shift


@lru_cache(maxsize=None)
def _gamma_series(order: int) -> AsymptoticSeries:
    # pi*gamma(X+2) / (pi*gamma(X)) = (X+2)^2 / ((X+1)(X+3)), from Gamma(z+1) = z Gamma(z)
    lead, power, ratio = ratio_series([(1, 2, 2), (1, 1, -1), (1, 3, -1)], order + 1)
    assert lead == 1 and power == 0
    alpha, sigma = solve_shift(ratio, 2, order)
    if alpha != 0:
        raise AssertionError("gamma envelope must tend to a constant")
    return sigma


def gamma_series(order: int) -> AsymptoticSeries:
    """The unit series s(X) with gamma(X) ~ s(X)/pi."""
    if order < 0:
        raise DomainError("order must be nonnegative")
    return _gamma_series(order)


def gamma_exact(x: int) -> PiMultiple:
    """gamma(X) at a positive integer: rational for odd X, rational/pi^2 for even X."""
    if x < 1:
        raise DomainError("gamma_exact needs X >= 1")
    if x % 2:
        d = (x - 1) // 2
        return PiMultiple(Fraction(odd_double_factorial(d) ** 2, 4 ** (d + 1) * factorial(d) * factorial(d + 1)))
    m = x // 2
    value = Fraction(2 ** (2 * m + 1) * factorial(m) ** 2, odd_double_factorial(m - 1) * odd_double_factorial(m))
    return PiMultiple(value, -2)
