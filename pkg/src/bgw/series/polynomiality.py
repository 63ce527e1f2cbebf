"""P_lambda interpolation, expansions of renormalized numbers, W_lambda, c_k and c-hat_k."""

from __future__ import annotations

import threading
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Mapping, Sequence

from .._sparse import SparsePoly
from ..dvv import compute_C
from ..exactnum import DomainError, in_z_half, odd_double_factorial
from ..partitions import canonical, enumerate_partitions, x_of
from .core import (
    AsymptoticSeries,
    RationalPolynomial,
    falling_factorial_poly,
    interpolate,
    ratio_series,
    solve_shift,
)
from .gamma import gamma_series

DEFAULT_K_MAX = 10


class ConsistencyError(RuntimeError):
    """A structural property that must hold (degree, monicity, leading order) failed."""


class MultiplicityPolynomial(SparsePoly):
    """Polynomial in p_1, p_2, ...; variable index i stands for p_{i+1}."""

    @classmethod
    def p(cls, r: int, power: int = 1):
        if r < 1:
            raise DomainError("multiplicity variables start at p_1")
        return cls.var(r - 1, power)

    def degree(self) -> int:
        """Degree under deg p_d = 2d + 1."""
        return self.weighted_degree(lambda i: 2 * (i + 1) + 1)

    def at(self, p: Mapping[int, int]) -> Fraction:
        """Evaluate at multiplicities {r: p_r}."""
        return self.evaluate(lambda i: p.get(i + 1, 0))

    def coefficient(self, p_exponents: Mapping[int, int]) -> Fraction:
        n = max(p_exponents, default=0)
        return self.coeff([p_exponents.get(r, 0) for r in range(1, n + 1)])

    def __str__(self):
        return self.render(lambda i: f"p{i + 1}")


def _delta(lam: Sequence[int]) -> int:
    return 1 if len(lam) == 1 else 0


def p_lambda_degree(lam: Sequence[int]) -> int:
    return x_of(lam) + _delta(lam) - 2


def _p_value(lam: tuple[int, ...], dn: int) -> Fraction:
    x = x_of(lam) + 2 * dn + 1
    c = compute_C(lam + (dn,))
    return c * 2 ** (dn + 1) * factorial(dn) * x ** _delta(lam) * factorial(x - 1) / odd_double_factorial(dn) ** 3


@lru_cache(maxsize=None)
def _p_lambda(lam: tuple[int, ...]) -> RationalPolynomial:
    deg = p_lambda_degree(lam)
    start = max(lam)
    nodes = list(range(start, start + deg + 1))
    xs = [x_of(lam) + 2 * dn + 1 for dn in nodes]
    poly = interpolate(xs, [_p_value(lam, dn) for dn in nodes])
    if poly.degree != deg or not poly.is_monic():
        raise ConsistencyError(f"P_{lam} has degree {poly.degree}, leading {poly.leading()}")
    if not all(in_z_half(c) for c in poly.coeffs):
        raise ConsistencyError(f"P_{lam} is not in Z[1/2][X]")
    # one extra node guards against an interpolation built on bad data
    extra = start + deg + 1
    if poly(x_of(lam) + 2 * extra + 1) != _p_value(lam, extra):
        raise ConsistencyError(f"P_{lam} fails at the check node d_n={extra}")
    return poly


def p_lambda(lam: Sequence[int]) -> RationalPolynomial:
    """Monic P_lambda(X) with C(lambda, d_n) = (2d_n+1)!!^3 P(X) / (2^(d_n+1) d_n! X^delta (X-1)!)."""
    lam = canonical(lam)
    if not lam or min(lam) < 1:
        raise DomainError("p_lambda needs a nonempty partition with positive parts")
    return _p_lambda(lam)


@lru_cache(maxsize=None)
def _rho_sigma(x_lam: int, order: int) -> AsymptoticSeries:
    """Unit series sigma with rho(X) = X^(2 - X_lambda) sigma(X).

    rho = (2d_n+1)!!^3 / (2^(d_n+1) d_n! (X-1)! gamma(X)) as a function of
    X = X_lambda + 2 d_n + 1, so X -> X+2 is d_n -> d_n+1 and
        rho(X+2)/rho(X) = (X-X_l+2)^3 (X+3) / ((X-X_l+1) X (X+2)^2).
    The leading constant is 1: P_lambda is monic and c-hat_0 = 1.
    """
    factors = [(1, 2 - x_lam, 3), (1, 3, 1), (1, 1 - x_lam, -1), (1, 0, -1), (1, 2, -2)]
    lead, power, ratio = ratio_series(factors, order + 1)
    assert lead == 1 and power == 0
    alpha, sigma = solve_shift(ratio, 2, order)
    if alpha != 2 - x_lam:
        raise ConsistencyError(f"unexpected growth exponent {alpha}")
    return sigma


def chat_series(lam: Sequence[int], order: int) -> AsymptoticSeries:
    """Expansion of C-hat(lambda, d_n) = C / gamma(X) in 1/X as d_n -> infinity."""
    if order < 0:
        raise DomainError("order must be nonnegative")
    lam = canonical(lam)
    if not lam:
        return AsymptoticSeries.one(order)
    poly = p_lambda(lam)
    return poly.as_series(order) * _rho_sigma(x_of(lam), order)


def _sub_multisets(lam: tuple[int, ...]):
    """(sub-multiset, number of index subsets giving it), excluding lam itself."""
    counts = sorted(Counter(lam).items())
    for choice in product(*[range(p + 1) for _, p in counts]):
        sub = []
        mult = 1
        for (v, p), q in zip(counts, choice):
            sub += [v] * q
            mult *= _binom(p, q)
        sub = tuple(sub)
        if sub != lam:
            yield sub, mult


def _binom(p: int, q: int) -> int:
    from math import comb

    return comb(p, q)


_w_lock = threading.Lock()
_w_cache: dict[tuple[tuple[int, ...], int], AsymptoticSeries] = {}


def w_lambda(lam: Sequence[int], order: int) -> AsymptoticSeries:
    """W_lambda(X) from C-hat(lambda, d_n) ~ -sum_{I subset lambda} W_{lambda_I}(X), W_empty = -1."""
    lam = canonical(lam)
    if lam and min(lam) < 1:
        raise DomainError("w_lambda needs positive parts")
    key = (lam, order)
    hit = _w_cache.get(key)
    if hit is not None:
        return hit
    if not lam:
        out = AsymptoticSeries([-1], order)
    else:
        out = -chat_series(lam, order)
        for sub, mult in _sub_multisets(lam):
            out = out - w_lambda(sub, order) * mult
        lead = 2 * sum(lam) + len(lam) + 1
        if any(out.coeffs[:lead]) or (lead <= order and not out[lead]):
            raise ConsistencyError(f"W_{lam} does not start at X^-{lead}")
    with _w_lock:
        _w_cache[key] = out
    return out


def weighted_size(lam: Sequence[int]) -> int:
    """2|lambda| + l(lambda) + 1, the leading X-power of W_lambda."""
    return 2 * sum(lam) + len(lam) + 1


def contributing_partitions(k: int) -> list[tuple[int, ...]]:
    """All lambda with 2|lambda| + l(lambda) + 1 <= k (including the empty one)."""
    out = [()]
    w = 1
    while 2 * w + 2 <= k:
        out += [p for p in enumerate_partitions(w) if weighted_size(p) <= k]
        w += 1
    return out


def _binomial_product(lam: tuple[int, ...]) -> MultiplicityPolynomial:
    out = MultiplicityPolynomial.constant(1)
    for r, q in Counter(lam).items():
        poly = falling_factorial_poly(q)
        term = MultiplicityPolynomial()
        for e, c in enumerate(poly.coeffs):
            if c:
                term = term + MultiplicityPolynomial.p(r, e) * c if e else term + c
        out = out * term
    return out


@lru_cache(maxsize=None)
def chat_poly(k: int, k_max: int = DEFAULT_K_MAX) -> MultiplicityPolynomial:
    """c-hat_k(p_1, p_2, ...) assembled from the W_lambda."""
    if k < 0 or k > k_max:
        raise DomainError(f"k must lie in [0, {k_max}]")
    out = MultiplicityPolynomial()
    for lam in contributing_partitions(k):
        c = w_lambda(lam, k)[k]
        if c:
            out = out - _binomial_product(lam) * c
    if k >= 1 and out.degree() > k - 1:
        raise ConsistencyError(f"deg c-hat_{k} = {out.degree()} exceeds {k - 1}")
    return out


def c_poly(k: int, k_max: int = DEFAULT_K_MAX) -> MultiplicityPolynomial:
    """c_k: coefficient of X^-k in (c-hat series) * (gamma series)."""
    g = gamma_series(k)
    out = MultiplicityPolynomial()
    for i in range(k + 1):
        out = out + chat_poly(i, k_max) * g[k - i]
    return out


def conjectured_w_leading(lam: Sequence[int]) -> Fraction:
    """2 (2|lambda| + l(lambda))! C(lambda), the conjectured leading coefficient of W_lambda."""
    lam = canonical(lam)
    return 2 * factorial(2 * sum(lam) + len(lam)) * compute_C(lam)
