from fractions import Fraction
from math import comb

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bgw.dvv import bracket
from bgw.exactnum import DomainError
from bgw.harness.tables import kappa_table
from bgw.kappa import (
    c_kappa,
    c_kappa_from_c,
    compositions,
    gprs_ratio,
    kappa_denominator,
    kappa_entries,
    kappa_integrality,
    kappa_monotone_check,
    kappa_number,
    sw_volume,
)

from refdata import KAPPA_BRACKETS, KAPPA_TABLES

small_vectors = st.lists(st.integers(0, 3), min_size=0, max_size=3).filter(lambda d: sum(d) <= 5)


@pytest.mark.parametrize("key", sorted(KAPPA_BRACKETS, key=lambda k: (k[0] + sum(k[1]), k)))
def test_kappa_brackets(key):
    m, d = key
    assert kappa_number(m, d) == KAPPA_BRACKETS[key]


@pytest.mark.parametrize("g", sorted(KAPPA_TABLES))
def test_normalized_kappa_tables(g):
    den, entries = KAPPA_TABLES[g]
    assert kappa_denominator(g) == den
    assert set(kappa_entries(g, 2)) == set(entries)
    for (m, d), want in entries.items():
        assert c_kappa(m, d) == want
    tab = kappa_table(g)
    assert tab.denominator == den
    assert [r.value for r in tab.rows] == [entries[k] for k in kappa_entries(g, 2)]


@pytest.mark.parametrize("g", range(2, 8))
def test_route_through_normalized_numbers(g):
    for m, d in kappa_entries(g, 1):
        assert c_kappa_from_c(m, d) == c_kappa(m, d)


@given(small_vectors)
@settings(max_examples=40, deadline=None)
def test_single_kappa_is_extra_tau_one(d):
    assert kappa_number(1, d) == bracket(tuple(d) + (1,))


@given(small_vectors.filter(bool))
@settings(max_examples=30, deadline=None)
def test_zero_kappa_power_is_plain(d):
    assert kappa_number(0, d) == bracket(d)
    assert c_kappa_from_c(0, d) == c_kappa(0, d)


@given(st.integers(1, 10), st.integers(1, 10))
def test_composition_count(m, parts):
    comps = list(compositions(m, parts))
    assert len(comps) == comb(m - 1, parts - 1)
    assert all(sum(c) == m and min(c) >= 1 for c in comps)


def test_composition_edges():
    assert list(compositions(0, 0)) == [()]
    assert list(compositions(3, 0)) == []


def test_kappa_domain():
    with pytest.raises(DomainError):
        kappa_number(-1)
    with pytest.raises(DomainError):
        kappa_number(0, ())


@pytest.mark.parametrize("g", range(2, 8))
def test_denominators_are_powers_of_two(g):
    assert kappa_integrality(g)


def test_monotone_from_m_one():
    reports = kappa_monotone_check(8, 1)
    assert all(r.ok for r in reports)
    assert [r.g for r in reports] == list(range(2, 9))


def test_monotone_fails_once_plain_numbers_join():
    # C(0; d) rows sit below the kappa rows in value but after them in order
    assert not all(r.ok for r in kappa_monotone_check(6, 0))


def test_volumes():
    v2 = sw_volume(2)
    assert v2.coefficient(1) == Fraction(3, 64)
    assert str(v2) == "3/64*pi^2"
    v31 = sw_volume(3, 1)
    assert v31.is_homogeneous()
    assert v31.coefficient(2, (0,)) == 2 * kappa_number(2, (0,)) == Fraction(681, 512)
    assert v31.coefficient(1, (1,)) == KAPPA_BRACKETS[(1, (1,))]
    assert v31.coefficient(0, (2,)) == bracket((2,)) / 8
    with mpmath.workdps(30):
        pi2 = mpmath.pi**2
        want = sum(
            mpmath.mpf(c.numerator) / c.denominator * pi2 ** m[0] * (mpmath.mpf(3) ** 2) ** (m[1] if len(m) > 1 else 0)
            for m, c in v31.terms.items()
        )
        assert abs(v31.numeric([3]) - want) < mpmath.mpf(10) ** -25
    with pytest.raises(DomainError):
        sw_volume(1, 0)


def test_large_genus_growth_ratio_approaches_one():
    ratios = [gprs_ratio(g) for g in range(6, 13)]
    assert all(a < b < 1 for a, b in zip(ratios, ratios[1:]))
    with pytest.raises(DomainError):
        gprs_ratio(2, (3,))
