"""Brackets with powers of kappa_1, their normalization, and volume polynomials."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, lcm
from typing import Sequence

import mpmath

from ._sparse import SparsePoly
from .dvv import bracket, compute_C
from .exactnum import DomainError, is_power_of_two, odd_double_factorial
from .partitions import canonical, enumerate_partitions, order_key, x_of


def compositions(m: int, parts: int):
    """Ordered tuples of `parts` positive integers summing to m."""
    if parts == 0:
        if m == 0:
            yield ()
        return
    for first in range(1, m - parts + 2):
        for rest in compositions(m - first, parts - 1):
            yield (first,) + rest


def _multinomial(m: int, parts: Sequence[int]) -> int:
    out = factorial(m)
    for p in parts:
        out //= factorial(p)
    return out


def genus_of(m: int, d: Sequence[int]) -> int:
    return m + sum(d) + 1


@lru_cache(maxsize=None)
def _kappa(m: int, d: tuple[int, ...]) -> Fraction:
    if m == 0:
        return bracket(d)
    total = Fraction(0)
    for l in range(1, m + 1):
        inner = 0
        for ms in compositions(m, l):
            inner += _multinomial(m, ms) * bracket(d + ms)
        total += Fraction((-1) ** (m - l), factorial(l)) * inner
    return total


def kappa_number(m: int, d: Sequence[int] = ()) -> Fraction:
    """<kappa_1^m tau_d1 ... tau_dn> in genus m + |d| + 1 (m = 0 gives the plain bracket)."""
    if m < 0 or any(x < 0 for x in d):
        raise DomainError("indices must be nonnegative")
    if m == 0 and not d:
        raise DomainError("the empty bracket is not defined")
    return _kappa(m, canonical(d))


def x_kappa(m: int, d: Sequence[int]) -> int:
    return x_of(d) + 3 * m


def c_kappa(m: int, d: Sequence[int] = ()) -> Fraction:
    """C(m; d) = 3^m 2^(2g-1) prod (2d_j+1)!! <kappa^m tau_d> / (X(d)+3m-1)!."""
    d = canonical(d)
    if m == 0:
        return compute_C(d)
    g = genus_of(m, d)
    pref = Fraction(3**m * 2 ** (2 * g - 1), factorial(x_kappa(m, d) - 1))
    for x in d:
        pref *= odd_double_factorial(x)
    return pref * kappa_number(m, d)


def _rising(a: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= a + i
    return out


def c_kappa_from_c(m: int, d: Sequence[int] = ()) -> Fraction:
    """C(m; d) assembled from normalized numbers C(d, m_1, ..., m_l) directly."""
    d = canonical(d)
    if m == 0:
        return compute_C(d)
    xm = x_kappa(m, d)
    total = Fraction(0)
    for l in range(1, m + 1):
        for ms in compositions(m, l):
            den = _rising(xm - m + l, m - l)
            for mi in ms:
                den *= odd_double_factorial(mi)
            total += Fraction((-1) ** (m - l) * _multinomial(m, ms), factorial(l) * den) * compute_C(d + ms)
    return 3**m * total


def kappa_entries(g: int, m_min: int = 1) -> list[tuple[int, tuple[int, ...]]]:
    """(m, d) with m + |d| = g - 1 and m >= m_min, in table order: m descending, then d ascending."""
    out = []
    for m in range(g - 1, m_min - 1, -1):
        w = g - 1 - m
        parts = [()] if w == 0 else sorted(enumerate_partitions(w), key=order_key)
        out += [(m, p) for p in parts if m or p]
    return out


def kappa_denominator(g: int, m_min: int = 2) -> int:
    """Least common denominator of C(m; d) over the table rows of genus g."""
    out = 1
    for m, d in kappa_entries(g, m_min):
        out = lcm(out, c_kappa(m, d).denominator)
    return out


def kappa_integrality(g: int) -> bool:
    """Every kappa bracket of genus g has a power-of-two denominator."""
    return all(is_power_of_two(kappa_number(m, d).denominator) for m, d in kappa_entries(g, 1))


@dataclass
class MonotoneReport:
    g: int
    chain: list[tuple[int, tuple[int, ...]]]
    values: list[Fraction]
    failures: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def kappa_monotone_check(g_max: int, m_min: int = 1) -> list[MonotoneReport]:
    """Strict increase of C(m; d) along the table order, per genus (a conjecture; reported)."""
    reports = []
    for g in range(2, g_max + 1):
        chain = kappa_entries(g, m_min)
        vals = [c_kappa(m, d) for m, d in chain]
        bad = [(chain[i], chain[i + 1]) for i in range(len(vals) - 1) if not vals[i] < vals[i + 1]]
        reports.append(MonotoneReport(g, chain, vals, bad))
    return reports


class VolumePolynomial(SparsePoly):
    """Polynomial in pi^2 (index 0) and L_1^2, L_2^2, ... (index j)."""

    def __init__(self, terms=None, genus: int | None = None, n: int = 0):
        super().__init__(terms)
        self.genus = genus
        self.n = n

    def _new(self, terms):
        return VolumePolynomial(terms, self.genus, self.n)

    def coefficient(self, pi_power: int, l_powers: Sequence[int] = ()) -> Fraction:
        """Coefficient of pi^(2a) prod L_j^(2b_j)."""
        return self.coeff((pi_power,) + tuple(l_powers))

    def is_homogeneous(self) -> bool:
        return {sum(m) for m in self.terms} <= {self.genus - 1}

    def numeric(self, lengths: Sequence = (), dps: int = 30):
        with mpmath.workdps(dps):
            vals = [mpmath.pi**2] + [mpmath.mpf(x) ** 2 for x in lengths]
            return self.evaluate(lambda i: 0) if not self.terms else mpmath.fsum(
                mpmath.mpf(c.numerator) / c.denominator * mpmath.fprod(vals[i] ** e for i, e in enumerate(m))
                for m, c in self.terms.items()
            )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            factors = [str(c)]
            for i, e in enumerate(m):
                if e:
                    name = "pi" if i == 0 else f"L{i}"
                    factors.append(f"{name}^{2 * e}")
            parts.append("*".join(factors))
        return " + ".join(parts)


def sw_volume(g: int, n: int = 0) -> VolumePolynomial:
    """sum over m + |d| = g-1 of <kappa^m tau_d> (2 pi^2)^m / m! prod L_j^(2d_j) / (2^d_j d_j!)."""
    if g < 1 or n < 0:
        raise DomainError("sw_volume needs g >= 1, n >= 0")
    if g == 1 and n == 0:
        raise DomainError("V_{1,0} is not defined")
    terms = {}
    for d in product(range(g), repeat=n):
        m = g - 1 - sum(d)
        if m < 0:
            continue
        c = kappa_number(m, d) * Fraction(2**m, factorial(m))
        for x in d:
            c /= 2**x * factorial(x)
        terms[(m,) + d] = c
    return VolumePolynomial(terms, g, n)


def gprs_prediction(g: int, d: Sequence[int] = (), dps: int = 30):
    """Conjectured leading growth of <kappa^(g-1-|d|) tau_d> in genus g."""
    w, n = sum(d), len(d)
    with mpmath.workdps(dps):
        num = mpmath.pi ** (2 * w + n - 2) * mpmath.mpf(2) ** (g - 1 - 3 * w) * mpmath.factorial(3 * g - 4 - w + n)
        den = mpmath.mpf(3) ** (3 * g - mpmath.mpf(7) / 2 - w + n)
        for x in d:
            den *= odd_double_factorial(x)
        return num / den


def gprs_ratio(g: int, d: Sequence[int] = (), dps: int = 30):
    """Exact bracket over the conjectured growth (report only)."""
    d = canonical(d)
    if g < sum(d) + 2:
        raise DomainError("need g >= |d| + 2")
    k = kappa_number(g - 1 - sum(d), d)
    with mpmath.workdps(dps):
        return mpmath.mpf(k.numerator) / k.denominator / gprs_prediction(g, d, dps)
