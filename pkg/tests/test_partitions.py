import pytest
from hypothesis import given
from hypothesis import strategies as st

from bgw.partitions import (
    EQ,
    GT,
    LT,
    canonical,
    enumerate_partitions,
    genus,
    multiplicities,
    multisets_with_x,
    order_cmp,
    order_key,
    parse,
    partitions_with_length,
    render,
    sorted_partitions,
    x_of,
)

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176]

index_vectors = st.lists(st.integers(0, 12), min_size=1, max_size=8)


@pytest.mark.parametrize("w", range(1, 16))
def test_partition_counts(w):
    parts = enumerate_partitions(w)
    assert len(parts) == PARTITION_COUNTS[w]
    assert len(set(parts)) == len(parts)
    assert all(sum(p) == w and min(p) >= 1 and list(p) == sorted(p) for p in parts)


def test_small_orders():
    assert enumerate_partitions(3) == [(3,), (1, 2), (1, 1, 1)]
    assert enumerate_partitions(4) == [(4,), (1, 3), (2, 2), (1, 1, 2), (1, 1, 1, 1)]


@pytest.mark.parametrize("w", range(1, 12))
def test_enumeration_is_sorted_by_order_cmp(w):
    parts = enumerate_partitions(w)
    assert sorted_partitions(reversed(parts)) == parts
    for a, b in zip(parts, parts[1:]):
        assert order_cmp(a, b) == LT
        assert order_cmp(b, a) == GT


def test_order_cmp_ignores_zeros_and_order():
    assert order_cmp((0, 2, 1), (1, 2)) == EQ
    with pytest.raises(ValueError):
        order_cmp((1,), (2,))


@given(index_vectors)
def test_x_and_genus(d):
    assert x_of(d) == 2 * genus(d) - 2 + len(d)
    assert sum(multiplicities(d).values()) == len(d)
    assert order_key(d) == order_key(list(reversed(d)))


@given(index_vectors)
def test_render_parse_roundtrip(d):
    assert parse(render(d)) == canonical(d)


def test_parse_errors():
    assert parse("") == ()
    assert parse(" 2,1 ") == (2, 1)
    with pytest.raises(ValueError):
        parse("1,x")
    with pytest.raises(ValueError):
        parse("1,-2")


@given(st.integers(1, 20), st.integers(1, 6))
def test_multisets_with_x(x, n):
    vecs = multisets_with_x(x, n)
    assert all(len(v) == n and x_of(v) == x and v == canonical(v) for v in vecs)
    assert len(set(vecs)) == len(vecs)
    if (x - n) % 2 or x < n:
        assert vecs == []
    else:
        w = (x - n) // 2
        assert len(vecs) == sum(1 for p in enumerate_partitions(w) if len(p) <= n) if w else len(vecs) == 1


def test_partitions_with_length():
    assert partitions_with_length(6, 2) == [(1, 5), (2, 4), (3, 3)]
    assert sum(len(partitions_with_length(10, k)) for k in range(1, 11)) == 42
    # (0,10), (1,9), ..., (5,5)
    assert len(multisets_with_x(2 * 10 + 2, 2)) == 6
