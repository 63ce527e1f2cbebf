"""Sparse multivariate polynomials over Fraction.

A monomial is a tuple of exponents with trailing zeros stripped, so ``()`` is
the constant monomial and ``(0, 2)`` is the square of the second variable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping


def _strip(m: Iterable[int]) -> tuple[int, ...]:
    m = list(m)
    while m and m[-1] == 0:
        m.pop()
    return tuple(m)


def _mono_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))


class SparsePoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], Fraction] | None = None):
        clean: dict[tuple[int, ...], Fraction] = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                m = _strip(m)
                clean[m] = clean.get(m, Fraction(0)) + c
                if not clean[m]:
                    del clean[m]
        self.terms = clean

    @classmethod
    def constant(cls, c):
        return cls({(): Fraction(c)})

    @classmethod
    def var(cls, i: int, power: int = 1):
        return cls({(0,) * i + (power,): Fraction(1)})

    def _new(self, terms):
        return type(self)(terms)

    def _coerce(self, other):
        if isinstance(other, SparsePoly):
            return other
        return self._new({(): Fraction(other)})

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            f = Fraction(other)
            return self._new({m: c * f for m, c in self.terms.items()})
        out: dict[tuple[int, ...], Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self._new({(): Fraction(1)})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            other = self._coerce(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, monomial: Iterable[int]) -> Fraction:
        return self.terms.get(_strip(monomial), Fraction(0))

    def nvars(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def weighted_degree(self, weight: Callable[[int], int]) -> int:
        """Max over monomials of sum e_i * weight(i); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e * weight(i) for i, e in enumerate(m)) for m in self.terms)

    def evaluate(self, values: Mapping[int, Fraction] | Callable[[int], Fraction]) -> Fraction:
        get = values if callable(values) else (lambda i: values.get(i, 0))
        total = Fraction(0)
        for m, c in self.terms.items():
            t = c
            for i, e in enumerate(m):
                if e:
                    t *= Fraction(get(i)) ** e
            total += t
        return total

    def render(self, name: Callable[[int], str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (sum(m), m)):
            c = self.terms[m]
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(name(i))
                elif e > 1:
                    factors.append(f"{name(i)}^{e}")
            mono = "*".join(factors)
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
        return f"{type(self).__name__}({self.render(lambda i: f'x{i}')})"
