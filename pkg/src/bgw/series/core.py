"""Truncated series in 1/X, univariate polynomials, and the shift solver.

Gamma-function ratios are never expanded with Bernoulli numbers here.  A
quantity rho(X) whose ratio rho(X+h)/rho(X) is a known rational function is
written rho = K * X**alpha * sigma(X) with sigma a unit series; the
coefficients of sigma are then forced one at a time by that ratio.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from ..exactnum import DomainError, binomial_poly_value


class AsymptoticSeries:
    """sum_{k=0}^{order} c_k X^{-k} + O(X^{-order-1})."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise DomainError("order must be nonnegative")
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        if not cs:
            raise DomainError("a series needs at least the X^0 coefficient")
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        if k > self.order:
            raise IndexError(f"coefficient {k} beyond order {self.order}")
        return self.coeffs[k] if k >= 0 else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        return f"AsymptoticSeries({self.render()}, order={self.order})"

    @classmethod
    def one(cls, order: int):
        return cls([1], order)

    @classmethod
    def zero(cls, order: int):
        return cls([0], order)

    def truncate(self, order: int) -> "AsymptoticSeries":
        if order > self.order:
            raise DomainError(f"cannot extend order {self.order} to {order}")
        return AsymptoticSeries(self.coeffs[: order + 1])

    def _coerce(self, other) -> "AsymptoticSeries":
        if isinstance(other, AsymptoticSeries):
            return other
        return AsymptoticSeries([other], self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return AsymptoticSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return AsymptoticSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, AsymptoticSeries):
            f = Fraction(other)
            return AsymptoticSeries([c * f for c in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return AsymptoticSeries(
            [sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1)]
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, AsymptoticSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def inverse(self) -> "AsymptoticSeries":
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not a unit")
        inv = [1 / a[0]]
        for k in range(1, self.order + 1):
            s = sum((a[i] * inv[k - i] for i in range(1, k + 1)), Fraction(0))
            inv.append(-s / a[0])
        return AsymptoticSeries(inv)

    def __truediv__(self, other):
        if not isinstance(other, AsymptoticSeries):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = AsymptoticSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def times_x_power(self, m: int) -> "AsymptoticSeries":
        """Multiply by X^{-m} (m >= 0) or X^{|m|} (m < 0, needs leading zeros)."""
        if m >= 0:
            return AsymptoticSeries([0] * m + list(self.coeffs))
        m = -m
        if any(self.coeffs[:m]):
            raise DomainError("result would contain positive powers of X")
        return AsymptoticSeries(self.coeffs[m:])

    def valuation(self) -> int | None:
        """Smallest k with c_k != 0, or None if zero through order."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def shift(self, c) -> "AsymptoticSeries":
        """The series of f(X + c), exact through the same order."""
        c = Fraction(c)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for k, a in enumerate(self.coeffs):
            if not a:
                continue
            # X^{-k} (1 + c/X)^{-k}
            for j in range(n - k + 1):
                out[k + j] += a * binomial_poly_value(-k, j) * c**j
        return AsymptoticSeries(out)

    def log(self) -> "AsymptoticSeries":
        """log of a unit series with constant term 1 (in t = 1/X)."""
        if self.coeffs[0] != 1:
            raise DomainError("log needs constant term 1")
        n = self.order
        deriv = AsymptoticSeries([(k + 1) * self.coeffs[k + 1] for k in range(n)] or [0])
        q = (deriv / self.truncate(max(n - 1, 0))).coeffs
        return AsymptoticSeries([0] + [q[k - 1] / k for k in range(1, n + 1)])

    def exp_of(self) -> "AsymptoticSeries":
        """exp of a series with zero constant term."""
        if self.coeffs[0] != 0:
            raise DomainError("exp needs zero constant term")
        n = self.order
        a = self.coeffs
        out = [Fraction(1)]
        for k in range(1, n + 1):
            out.append(sum((i * a[i] * out[k - i] for i in range(1, k + 1)), Fraction(0)) / k)
        return AsymptoticSeries(out)

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        return sum((c / x**k for k, c in enumerate(self.coeffs)), Fraction(0))

    def render(self, var: str = "X") -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}/{var}")
            else:
                parts.append(f"{c}/{var}^{k}")
        body = " + ".join(parts) if parts else "0"
        return body.replace("+ -", "- ") + f" + O({var}^-{self.order + 1})"

    def to_json(self) -> str:
        return json.dumps(
            {"order": self.order, "coefficients": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}
        )

    @classmethod
    def from_json(cls, text: str) -> "AsymptoticSeries":
        data = json.loads(text)
        return cls([Fraction(s) for s in data["coefficients"]], data["order"])


class RationalPolynomial:
    """Univariate polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1):
        p = cls([lead])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_monic(self) -> bool:
        return self.leading() == 1

    def __call__(self, x):
        out = Fraction(0) if not isinstance(x, RationalPolynomial) else RationalPolynomial()
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def _coerce(self, other):
        return other if isinstance(other, RationalPolynomial) else RationalPolynomial([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RationalPolynomial([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, RationalPolynomial):
            f = Fraction(other)
            return RationalPolynomial([c * f for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (1 / Fraction(other))

    def divmod(self, other: "RationalPolynomial"):
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.coeffs[-1]
        for i in range(len(q) - 1, -1, -1):
            c = rem[i + len(other.coeffs) - 1] / lead
            q[i] = c
            for j, b in enumerate(other.coeffs):
                rem[i + j] -= c * b
        return RationalPolynomial(q), RationalPolynomial(rem)

    def __eq__(self, other):
        if not isinstance(other, RationalPolynomial):
            other = RationalPolynomial([other])
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def shift(self, c) -> "RationalPolynomial":
        """p(x + c)."""
        return self(RationalPolynomial([c, 1]))

    def render(self, var: str = "X") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"RationalPolynomial({self.render()})"

    def as_series(self, order: int) -> AsymptoticSeries:
        """p(X) / (lead * X^deg) as a unit series in 1/X."""
        if not self.coeffs:
            raise DomainError("zero polynomial has no unit series")
        lead = self.leading()
        return AsymptoticSeries([c / lead for c in reversed(self.coeffs)], order)


def interpolate(nodes: Sequence, values: Sequence) -> RationalPolynomial:
    """Exact Newton interpolation through (nodes[i], values[i])."""
    xs = [Fraction(x) for x in nodes]
    if len(set(xs)) != len(xs):
        raise DomainError("interpolation nodes must be distinct")
    table = [Fraction(v) for v in values]
    coef = [table[0]]
    for level in range(1, len(xs)):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(len(table) - 1)]
        coef.append(table[0])
    poly = RationalPolynomial([coef[-1]])
    for i in range(len(coef) - 2, -1, -1):
        poly = poly * RationalPolynomial([-xs[i], 1]) + coef[i]
    return poly


def rational_series(num: RationalPolynomial, den: RationalPolynomial, order: int) -> AsymptoticSeries:
    """num(X)/den(X) in powers of 1/X; needs deg num <= deg den."""
    gap = den.degree - num.degree
    if gap < 0:
        raise DomainError("numerator degree exceeds denominator degree")
    if not num.coeffs:
        return AsymptoticSeries.zero(order)
    q = num.as_series(order) / den.as_series(order) * (num.leading() / den.leading())
    return q.times_x_power(gap).truncate(order)


def linear_factor_series(a, power, order: int) -> AsymptoticSeries:
    """(1 + a/X)^power for rational power, as a series in 1/X."""
    a = Fraction(a)
    return AsymptoticSeries([binomial_poly_value(power, j) * a**j for j in range(order + 1)])


def inverse_pochhammer_series(a, b: int, order: int) -> AsymptoticSeries:
    """1/(X + a)_b = 1/((X+a)(X+a+1)...(X+a+b-1)) in powers of 1/X."""
    if b > order:
        return AsymptoticSeries.zero(order)
    inner = order - b
    unit = AsymptoticSeries.one(inner)
    for i in range(b):
        unit = unit * linear_factor_series(Fraction(a) + i, -1, inner)
    return unit.times_x_power(b)


def ratio_series(factors: Sequence[tuple], order: int) -> tuple[Fraction, int, AsymptoticSeries]:
    """Expand prod (alpha_i X + beta_i)^{e_i} as K * X^p * (unit series).

    factors are (alpha, beta, e) triples with integer e.
    """
    lead = Fraction(1)
    power = 0
    unit = AsymptoticSeries.one(order)
    for alpha, beta, e in factors:
        alpha, beta = Fraction(alpha), Fraction(beta)
        lead *= alpha**e
        power += e
        unit = unit * linear_factor_series(beta / alpha, e, order)
    return lead, power, unit


def solve_shift(ratio: AsymptoticSeries, h, order: int) -> tuple[Fraction, AsymptoticSeries]:
    """Find alpha and a unit series sigma with
        (X+h)^alpha sigma(X+h) = ratio(X) * X^alpha sigma(X).

    ratio must be a unit series with constant term 1 known through order+1.
    alpha is read off the 1/X coefficient of ratio (alpha = r_1 / h).
    """
    h = Fraction(h)
    if ratio.order < order + 1:
        raise DomainError("ratio series must extend one order past the target")
    if ratio[0] != 1:
        raise DomainError("ratio must tend to 1")
    alpha = ratio[1] / h
    s = (ratio / linear_factor_series(h, alpha, ratio.order)).coeffs
    if s[1] != 0:
        raise AssertionError("internal: residual 1/X term after removing X^alpha")
    sigma = [Fraction(1)]
    for n in range(2, order + 2):
        # coefficient of X^{-n}: sigma_{n-1} enters linearly with -(n-1) h
        acc = Fraction(0)
        for k in range(n - 1):
            acc += sigma[k] * (binomial_poly_value(-k, n - k) * h ** (n - k) - s[n - k])
        sigma.append(acc / ((n - 1) * h))
    return alpha, AsymptoticSeries(sigma)


def shift_residual(sigma: AsymptoticSeries, alpha, ratio: AsymptoticSeries, h) -> AsymptoticSeries:
    """(1+h/X)^alpha sigma(X+h) - ratio(X) sigma(X), which should vanish."""
    n = sigma.order
    lhs = linear_factor_series(h, alpha, n) * sigma.shift(h)
    return lhs - ratio.truncate(n) * sigma


def falling_factorial_poly(q: int) -> RationalPolynomial:
    """binom(p, q) as a polynomial in p."""
    poly = RationalPolynomial([1])
    for i in range(q):
        poly = poly * RationalPolynomial([-i, 1])
    return poly / factorial(q)
