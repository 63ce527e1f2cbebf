"""DVV-type recursion for B(d) and C(d), and the bound functions theta, f.

B(d) = <tau_{d_1} ... tau_{d_n}> * prod (2 d_j + 1)!! and
C(d) = 2^(2g-1) B(d) / (X(d) - 1)!.
"""

from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Iterable, Sequence

from .exactnum import PI_MAX_DIGITS, PrecisionError, inv_pi_bounds
from .partitions import canonical, genus, multisets_with_x, x_of

B_ZERO = Fraction(1, 8)


class InconsistencyError(RuntimeError):
    """Two evaluations of the same quantity disagree."""


class BgwTable:
    """Memo of B keyed by sorted tuples.

    Reads are lock-free dict lookups; inserts go through a lock and are
    idempotent, so concurrent workers may race on the same key safely.
    """

    def __init__(self):
        self._values: dict[tuple[int, ...], Fraction] = {(0,): B_ZERO}
        self._lock = threading.Lock()
        self.x_max = 1

    def __contains__(self, key) -> bool:
        return key in self._values

    def __len__(self) -> int:
        return len(self._values)

    def get(self, key):
        return self._values.get(key)

    def insert(self, key: tuple[int, ...], value: Fraction) -> Fraction:
        with self._lock:
            old = self._values.setdefault(key, value)
        if old != value:
            raise InconsistencyError(f"B{key}: {old} != {value}")
        return old

    def items(self):
        return list(self._values.items())

    def B(self, d: Iterable[int]) -> Fraction:
        """B of the multiset d (memoized, canonical evaluation order)."""
        key = canonical(d)
        val = self._values.get(key)
        if val is not None:
            return val
        if not key:
            raise ValueError("B() of the empty vector is undefined")
        if any(v < 0 for v in key):
            raise ValueError(f"negative entry in {key}")
        return self.insert(key, _dvv_rhs(key[0], key[1:], self))

    def warm(self, x_max: int) -> None:
        """Fill every key with X(d) <= x_max, in order of increasing X."""
        for x in range(1, x_max + 1):
            for n in range(1, x + 1):
                for key in multisets_with_x(x, n):
                    self.B(key)
        self.x_max = max(self.x_max, x_max)


_default_table = BgwTable()


def default_table() -> BgwTable:
    return _default_table


def _submultisets(rest: Sequence[int]):
    """Yield (I, J, multiplicity) over labelled splits rest = I + J."""
    counts = sorted(Counter(rest).items())
    ranges = [range(p + 1) for _, p in counts]
    for choice in product(*ranges):
        mult = 1
        left: list[int] = []
        right: list[int] = []
        for (v, p), c in zip(counts, choice):
            mult *= comb(p, c)
            left += [v] * c
            right += [v] * (p - c)
        yield left, right, mult


def _dvv_rhs(d: int, rest: Sequence[int], table: BgwTable) -> Fraction:
    """Right-hand side of the DVV-type relation with d distinguished."""
    rest = list(rest)
    if d == 0:
        if not rest:
            return B_ZERO
        return x_of(rest) * table.B(rest)
    total = Fraction(0)
    for i, di in enumerate(rest):
        shifted = rest.copy()
        shifted[i] = di + d
        total += (2 * di + 1) * table.B(shifted)
    half = Fraction(0)
    for a in range(d):
        b = d - 1 - a
        half += table.B([a, b] + rest)
        for left, right, mult in _submultisets(rest):
            half += mult * table.B([a] + left) * table.B([b] + right)
    return total + half / 2


def compute_B(d: Sequence[int], table: BgwTable | None = None) -> Fraction:
    """B(d) by one DVV step with the FIRST entry of d distinguished.

    Sub-results come from (and are stored in) the table under sorted keys.
    If the table already holds B(d) the two values must agree; a mismatch
    means the recursion is not symmetric and raises InconsistencyError.
    """
    table = table or _default_table
    d = tuple(d)
    if not d:
        raise ValueError("B() of the empty vector is undefined")
    if any(v < 0 for v in d):
        raise ValueError(f"negative entry in {d}")
    value = _dvv_rhs(d[0], d[1:], table)
    return table.insert(canonical(d), value)


def B(d: Sequence[int], table: BgwTable | None = None) -> Fraction:
    return (table or _default_table).B(d)


def normalize(d: Sequence[int], b_value: Fraction) -> Fraction:
    g = genus(d)
    return Fraction(2 ** (2 * g - 1)) * b_value / factorial(x_of(d) - 1)


def compute_C(d: Sequence[int], table: BgwTable | None = None) -> Fraction:
    """Normalized number C(d) = 2^(2g-1) B(d) / (X(d)-1)!."""
    return normalize(d, B(d, table))


def bracket(d: Sequence[int], table: BgwTable | None = None) -> Fraction:
    """The intersection number <tau_{d_1} ... tau_{d_n}> itself."""
    denom = 1
    for v in d:
        denom *= factorial(2 * v + 1) // (2**v * factorial(v))
    return B(d, table) / denom


def string_reduce(d: Sequence[int], table: BgwTable | None = None) -> Fraction:
    """B(0, d') = (2 g(d') + n' - 2) B(d') for d = (0, d')."""
    d = tuple(d)
    if not d or d[0] != 0:
        raise ValueError("string_reduce needs a leading 0 entry")
    rest = d[1:]
    if not rest:
        raise ValueError("string_reduce needs a nonempty remainder")
    return x_of(rest) * B(rest, table)


def theta(x: int, n: int, table: BgwTable | None = None) -> Fraction:
    """max C(d) over d in (Z>=0)^n with X(d) = x."""
    cands = multisets_with_x(x, n)
    if not cands:
        raise ValueError(f"no d with n={n} and X={x}")
    return max(compute_C(d, table) for d in cands)


@dataclass(frozen=True)
class BoundValue:
    """1/pi + rational_part."""

    rational_part: Fraction

    def interval(self, digits: int = PI_MAX_DIGITS) -> tuple[Fraction, Fraction]:
        lo, hi = inv_pi_bounds(digits)
        return lo + self.rational_part, hi + self.rational_part

    def compare(self, x: Fraction, digits: int = PI_MAX_DIGITS) -> int:
        """Sign of (self - x); raises if pi bounds cannot decide."""
        lo, hi = self.interval(digits)
        if lo > x:
            return 1
        if hi < x:
            return -1
        raise PrecisionError(f"cannot order {x} against 1/pi + ({self.rational_part}) at {digits} digits")

    def __ge__(self, x) -> bool:
        if isinstance(x, BoundValue):
            return self.rational_part >= x.rational_part
        return self.compare(Fraction(x)) > 0

    def __le__(self, x) -> bool:
        if isinstance(x, BoundValue):
            return self.rational_part <= x.rational_part
        return self.compare(Fraction(x)) < 0


@lru_cache(maxsize=None)
def _f_rational(x: int, n: int) -> Fraction:
    if x <= 7 or n in (1, 2):
        return Fraction(0)
    return (
        Fraction(2, 3) * _f_rational(x - 1, n - 1)
        + Fraction(1, 3) * _f_rational(x - 1, n + 1)
        + Fraction(4, (x - 1) * (x - 2))
    )


def f_bound(x: int, n: int) -> BoundValue:
    """Upper bound f(X, n) on theta(X, n).

    The recursion's weights 2/3 + 1/3 sum to one, so the 1/pi initial value
    carries through unchanged and only the rational part needs tracking.
    """
    if x < 1 or n < 1:
        raise ValueError("f(X, n) needs X, n >= 1")
    for xx in range(8, x):  # fill bottom-up to keep recursion shallow
        _f_rational(xx, n + x - xx)
    return BoundValue(_f_rational(x, n))
