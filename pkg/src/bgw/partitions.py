"""Index vectors, partitions and the length-then-lexicographic ordering."""

from __future__ import annotations

from collections import Counter
from functools import cmp_to_key, lru_cache
from typing import Iterable, Sequence

LT, EQ, GT = -1, 0, 1


def canonical(d: Iterable[int]) -> tuple[int, ...]:
    """Sorted-ascending key; B and C are symmetric so this is the memo key."""
    return tuple(sorted(d))


def weight(d: Sequence[int]) -> int:
    return sum(d)


def genus(d: Sequence[int]) -> int:
    return sum(d) + 1


def x_of(d: Sequence[int]) -> int:
    """X(d) = sum(2 d_j + 1) = 2 g(d) - 2 + n."""
    return sum(2 * dj + 1 for dj in d)


def multiplicities(d: Sequence[int]) -> dict[int, int]:
    """p_r(d): how often each value r occurs.  Absent values have p_r = 0."""
    return dict(Counter(d))


def order_key(d: Sequence[int]) -> tuple:
    """Sort key realising order_cmp: length first, then ascending entries."""
    s = canonical(x for x in d if x != 0)
    return (len(s), s)


def order_cmp(d: Sequence[int], e: Sequence[int]) -> int:
    if sum(d) != sum(e):
        raise ValueError("order_cmp compares partitions of the same weight")
    a, b = order_key(d), order_key(e)
    return LT if a < b else GT if a > b else EQ


@lru_cache(maxsize=None)
def _partitions_desc(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_desc(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(w: int) -> list[tuple[int, ...]]:
    """All partitions of w (positive parts, ascending tuples) in order_cmp order."""
    parts = [tuple(reversed(p)) for p in _partitions_desc(w, w)]
    parts.sort(key=order_key)
    return parts


def partitions_with_length(w: int, n: int) -> list[tuple[int, ...]]:
    return [p for p in enumerate_partitions(w) if len(p) == n]


def multisets_with_x(x: int, n: int) -> list[tuple[int, ...]]:
    """All d in (Z>=0)^n up to order with X(d) = x, as sorted tuples."""
    if x < n or (x - n) % 2:
        return []
    w = (x - n) // 2
    out = []
    for p in _partitions_desc(w, w):
        if len(p) <= n:
            out.append(canonical((0,) * (n - len(p)) + p))
    return sorted(out, key=lambda t: (len([v for v in t if v]), t))


def render(d: Sequence[int]) -> str:
    """Comma separated, ascending: ``1,1,2``."""
    return ",".join(str(v) for v in canonical(d))


def parse(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        vals = tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed partition {text!r}") from exc
    if any(v < 0 for v in vals):
        raise ValueError(f"negative part in {text!r}")
    return vals


def sorted_partitions(parts: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    return sorted((tuple(p) for p in parts), key=cmp_to_key(order_cmp))
