"""Correctly rounded decimal rendering of exact values."""

from __future__ import annotations

from fractions import Fraction

from ..exactnum import PI_MAX_DIGITS, PiMultiple, PrecisionError


def _round_sig(x: Fraction, digits: int) -> tuple[int, int]:
    """(mantissa, exponent) with |x| ~ mantissa * 10^exponent, mantissa of `digits` digits, half up."""
    if x == 0:
        return 0, 0
    sign = -1 if x < 0 else 1
    x = abs(x)
    e = len(str(x.numerator)) - len(str(x.denominator))
    if x >= Fraction(10) ** e:
        e += 1
    # now 10^(e-1) <= x < 10^e
    while x < Fraction(10) ** (e - 1):
        e -= 1
    scale = Fraction(10) ** (digits - e)
    q, r = divmod(x.numerator * scale.numerator, x.denominator * scale.denominator)
    if 2 * r >= x.denominator * scale.denominator:
        q += 1
    if q == 10**digits:
        q //= 10
        e += 1
    return sign * q, e - digits


def _format(mantissa: int, exp: int, digits: int) -> str:
    if mantissa == 0:
        return "0." + "0" * (digits - 1) if digits > 1 else "0"
    sign = "-" if mantissa < 0 else ""
    s = str(abs(mantissa))
    point = len(s) + exp  # digits before the decimal point
    if -6 < point <= 21:
        if point <= 0:
            body = "0." + "0" * (-point) + s
        elif point >= len(s):
            body = s + "0" * (point - len(s))
        else:
            body = s[:point] + "." + s[point:]
    else:
        body = s[0] + ("." + s[1:] if len(s) > 1 else "") + f"e{point - 1:+d}"
    return sign + body


def numeric(value, digits: int = 6) -> str:
    """Decimal string of `value` rounded half-up to `digits` significant digits.

    PiMultiple values are enclosed with pi bounds of growing precision until
    both ends round the same way.
    """
    if digits < 1:
        raise ValueError("digits must be positive")
    if isinstance(value, PiMultiple) and value.pi_power != 0:
        prec = digits + 5
        while prec <= PI_MAX_DIGITS:
            lo, hi = value.bounds(prec)
            a, b = _round_sig(lo, digits), _round_sig(hi, digits)
            if a == b:
                return _format(*a, digits)
            prec += 5
        raise PrecisionError(f"cannot round to {digits} digits with {PI_MAX_DIGITS}-digit pi")
    if isinstance(value, PiMultiple):
        value = value.coefficient
    return _format(*_round_sig(Fraction(value), digits), digits)
