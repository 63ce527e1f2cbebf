from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bgw.dvv import B, compute_C
from bgw.resolvent import (
    B_fourpoint,
    B_npoint,
    B_power,
    B_threepoint,
    B_twopoint,
    B_twopoint_resolvent,
    B_window,
    C_onepoint,
    C_twopoint,
    C_twopoint_halfint,
    f_coeff,
    mat_add,
    mat_mul,
    mat_scale,
    mat_trace,
    min_count,
    trace_a,
    trace_a2,
    trace_a3,
)

entries = st.integers(0, 4)
mats = st.tuples(*[st.builds(Fraction, st.integers(-50, 50), st.integers(1, 50))] * 4)


@given(mats, mats, mats)
def test_matrix_helpers(x, y, z):
    assert mat_mul(mat_mul(x, y), z) == mat_mul(x, mat_mul(y, z))
    assert mat_trace(mat_mul(x, y)) == mat_trace(mat_mul(y, x))
    assert mat_add(x, mat_scale(-1, x)) == (0, 0, 0, 0)


def test_f_coeff_start():
    assert f_coeff(0) == 1
    assert f_coeff(1) == Fraction(1, 16)


def test_min_count():
    assert min_count((3, -1, 2)) == 0
    assert min_count((3, 5, 2)) == 2


@given(st.integers(-1, 6), st.integers(-1, 6))
def test_two_trace_closed_form(k1, k2):
    assert trace_a2(k1, k2) == trace_a((k1, k2))


@given(st.integers(-1, 4), st.integers(-1, 4), st.integers(-1, 4))
def test_three_trace_closed_form(k1, k2, k3):
    assert trace_a3(k1, k2, k3) == trace_a((k1, k2, k3))


def test_trace_vanishes_below_minus_one():
    assert trace_a((-2, 3)) == 0


@given(entries, entries)
@settings(deadline=None)
def test_two_point_routes(a, b):
    want = B((a, b))
    assert B_twopoint(a, b) == want
    assert B_twopoint_resolvent(a, b) == want
    assert B_npoint((a, b)) == want
    assert C_twopoint(a, b) == compute_C((a, b))


@given(entries, entries, entries)
@settings(max_examples=40, deadline=None)
def test_three_point_routes(a, b, c):
    assert B_threepoint(a, b, c) == B((a, b, c))


@given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
@settings(max_examples=20, deadline=None)
def test_four_point_routes(a, b, c, d):
    assert B_fourpoint(a, b, c, d) == B((a, b, c, d))


@pytest.mark.parametrize("k", range(0, 12))
def test_one_point_closed_form(k):
    assert C_onepoint(k) == compute_C((k,))


def test_half_integer_continuation_agrees_at_integers():
    with mpmath.workdps(40):
        for a, b in [(0, 3), (2, 5), (4, 4)]:
            c = C_twopoint(a, b)
            got = C_twopoint_halfint(a, b, 40)
            assert abs(got - mpmath.mpf(c.numerator) / c.denominator) < mpmath.mpf(10) ** -35


@pytest.mark.parametrize("d, m", [(0, 2), (1, 1), (1, 3), (2, 2), (3, 1)])
def test_window_matches_recursion(d, m):
    win = B_window(d, m, 3, 3)
    for (a, b), val in win.items():
        assert val == B((a, b) + (d,) * m)


@pytest.mark.parametrize("d, n", [(1, 2), (1, 5), (2, 4), (3, 3)])
def test_power(d, n):
    assert B_power(d, n) == B((d,) * n)


def test_window_argument_checks():
    with pytest.raises(ValueError):
        B_window(-1, 1, 1, 1)
    with pytest.raises(ValueError):
        B_power(2, 1)
    with pytest.raises(ValueError):
        B_npoint((3,))
