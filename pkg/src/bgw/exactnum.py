"""Exact scalar arithmetic and combinatorial helpers.

Every value in the package is a :class:`fractions.Fraction` (always reduced,
positive denominator).  π never enters an exact computation as a float: it
appears either as a symbolic power inside :class:`PiMultiple` or as a pair of
rational bounds from :func:`pi_bounds`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

ExactRational = Fraction

# 100 decimals of pi, truncated (not rounded).
_PI_DIGITS = (
    "3."
    "1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679"
)
PI_MAX_DIGITS = 64


class DomainError(ValueError):
    """Argument outside the domain where a quantity is defined."""


class PrecisionError(ArithmeticError):
    """Requested precision exceeds what the stored constants can certify."""


_df_lock = threading.Lock()
_df_table: list[int] = [1, 1]  # _df_table[k] = k!! for k >= 0


def double_factorial(k: int) -> Fraction:
    """k!! with the conventions (-1)!! = 1 and (-3)!! = -1."""
    if k < -3:
        raise DomainError(f"double factorial undefined for k={k}")
    if k == -3:
        return Fraction(-1)
    if k == -2:
        raise DomainError("(-2)!! is undefined")
    if k == -1:
        return Fraction(1)
    return Fraction(_df_int(k))


def _df_int(k: int) -> int:
    table = _df_table
    if k < len(table):
        return table[k]
    with _df_lock:
        while len(table) <= k:
            n = len(table)
            table.append(n * table[n - 2])
        return table[k]


def odd_double_factorial(d: int) -> int:
    """(2d+1)!! as an int, for d >= -1."""
    if d == -1:
        return 1
    return _df_int(2 * d + 1)


def pochhammer(a, b: int) -> Fraction:
    """Rising factorial (a)_b = a (a+1) ... (a+b-1)."""
    if b < 0:
        raise DomainError("pochhammer length must be nonnegative")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(b):
        out *= a + i
    return out


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind."""
    if n < 0 or k < 0:
        return 0
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0:
        return 0
    if k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def binomial_poly_value(p, q: int) -> Fraction:
    """binom(p, q) for arbitrary (rational) p as p(p-1)...(p-q+1)/q!."""
    out = Fraction(1)
    for i in range(q):
        out *= Fraction(p) - i
    return out / factorial(q)


def pi_bounds(digits: int) -> tuple[Fraction, Fraction]:
    """Rational (lower, upper) with lower < pi < upper and width 10**-digits."""
    if digits < 1:
        raise DomainError("digits must be positive")
    if digits > PI_MAX_DIGITS:
        raise PrecisionError(f"pi is only certified to {PI_MAX_DIGITS} digits")
    scale = 10**digits
    lower = Fraction(int(_PI_DIGITS.replace(".", "")[: digits + 1]), scale)
    return lower, lower + Fraction(1, scale)


def inv_pi_bounds(digits: int) -> tuple[Fraction, Fraction]:
    lo, hi = pi_bounds(digits)
    return 1 / hi, 1 / lo


@dataclass(frozen=True)
class PiMultiple:
    """coefficient * pi**pi_power with pi_power in {-2, 0, 2}."""

    coefficient: Fraction
    pi_power: int = 0

    def __post_init__(self):
        if self.pi_power not in (-2, 0, 2):
            raise DomainError(f"unsupported pi power {self.pi_power}")
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))

    def _aligned(self, other: "PiMultiple") -> int:
        if self.coefficient == 0:
            return other.pi_power
        if other.coefficient == 0 or self.pi_power == other.pi_power:
            return self.pi_power
        raise DomainError("cannot add multiples of different powers of pi")

    def __add__(self, other):
        other = _as_pim(other)
        return PiMultiple(self.coefficient + other.coefficient, self._aligned(other))

    def __neg__(self):
        return PiMultiple(-self.coefficient, self.pi_power)

    def __sub__(self, other):
        return self + (-_as_pim(other))

    def __mul__(self, other):
        other = _as_pim(other)
        power = self.pi_power + other.pi_power
        if self.coefficient == 0 or other.coefficient == 0:
            return PiMultiple(0, 0)
        return PiMultiple(self.coefficient * other.coefficient, power)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_pim(other)
        if other.coefficient == 0:
            raise ZeroDivisionError("division by zero PiMultiple")
        return self * PiMultiple(1 / other.coefficient, -other.pi_power)

    def bounds(self, digits: int = PI_MAX_DIGITS) -> tuple[Fraction, Fraction]:
        """Rational interval containing the value."""
        if self.pi_power == 0:
            return self.coefficient, self.coefficient
        lo, hi = pi_bounds(digits)
        lo, hi = lo**2, hi**2
        if self.pi_power < 0:
            lo, hi = 1 / hi, 1 / lo
        a, b = self.coefficient * lo, self.coefficient * hi
        return (a, b) if a <= b else (b, a)


def _as_pim(x) -> PiMultiple:
    if isinstance(x, PiMultiple):
        return x
    return PiMultiple(Fraction(x), 0)


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def odd_part(n: int) -> int:
    n = abs(n)
    if n == 0:
        return 0
    return n >> ((n & -n).bit_length() - 1)


def in_z_half(x: Fraction) -> bool:
    """Membership in Z[1/2]: the denominator is a power of two."""
    return is_power_of_two(Fraction(x).denominator)
