from fractions import Fraction
from math import factorial as mfact

import pytest
from hypothesis import given, settings, strategies as st

from giftex.core import (BudgetExceeded, bessel_y, binomial, build_e_table, compositions, e1_closed,
                         e_multinomial, g, g_ordered_multinomial, g_sequence, h)


def test_binomial_examples():
    assert binomial(4, 2) == 6
    assert binomial(9, 0) == 1
    assert binomial(3, 5) == 0


def test_table_spot_values():
    assert build_e_table(1, 3)(3, 4) == 6
    assert build_e_table(2, 2)(2, 4) == 7
    assert build_e_table(3, 3)(3, 9) == 1855


def test_table_out_of_range_is_zero():
    t = build_e_table(2, 4)
    assert t(-1, 0) == 0 and t(2, -3) == 0
    assert t(3, 2) == 0 and t(3, 10) == 0
    with pytest.raises(IndexError):
        t(5, 7)


def test_multinomial_examples():
    assert e_multinomial(1, 2, 3) == 3
    assert e_multinomial(2, 3, 5) == 25
    assert e_multinomial(3, 6, 5) == 0


def test_compositions_satisfy_constraints():
    for parts in compositions(3, 5, 11):
        assert sum(parts) == 5
        assert sum((i + 1) * a for i, a in enumerate(parts)) == 11


def test_e1_closed_examples():
    assert e1_closed(3, 5) == 15
    assert e1_closed(6, 6) == 1
    assert e1_closed(4, 8) == 105
    assert e1_closed(4, 9) == 0 and e1_closed(4, 3) == 0


def test_g_examples():
    assert g(2, 3) == 842
    assert g(3, 3) == 18252
    assert all(g(0, n) == 1 for n in range(12))


def test_h_examples():
    assert h(1, 3) == 42
    assert h(0, 4) == 24
    assert h(2, 2) == 6
    with pytest.raises(ValueError):
        h(1, 0)


def test_ordered_multinomial():
    assert g_ordered_multinomial(1, 2) == 7
    assert g_ordered_multinomial(2, 2) == 31
    assert g_ordered_multinomial(5, 0) == 1
    for sigma in range(4):
        for n in range(6):
            assert g_ordered_multinomial(sigma, n) == g(sigma, n)
    with pytest.raises(BudgetExceeded):
        g_ordered_multinomial(3, 12, budget=1000)


def test_bessel_examples():
    assert bessel_y(2, 1) == 7
    assert bessel_y(0, Fraction(3, 7)) == 1
    assert bessel_y(4, 1) == 266


def test_bessel_matches_g1():
    seq = g_sequence(1, 50)
    assert [bessel_y(n, 1) for n in range(51)] == seq


def test_recurrence_equals_multinomial():
    for sigma in range(4):
        t = build_e_table(sigma, 10)
        for n in range(11):
            for k in range((sigma + 1) * n + 2):
                assert t(n, k) == e_multinomial(sigma, n, k), (sigma, n, k)


def test_recurrence_equals_e1_closed():
    t = build_e_table(1, 12)
    for n in range(13):
        for k in range(2 * n + 2):
            assert t(n, k) == e1_closed(n, k)


def test_diagonals():
    for sigma in range(4):
        t = build_e_table(sigma, 8)
        for n in range(9):
            assert t(n, n) == 1
            top = (sigma + 1) * n
            assert t(n, top) == mfact(top) // (mfact(n) * mfact(sigma + 1) ** n)


def test_monotone_in_sigma():
    for sigma in range(4):
        a, b = build_e_table(sigma, 8), build_e_table(sigma + 1, 8)
        for n, k, v in a.items():
            assert v <= b(n, k)


def test_columns_stabilize():
    tables = [build_e_table(s, 8) for s in range(7)]
    for s in range(6):
        for n in range(9):
            for k in range(n, n + s + 1):
                assert tables[s](n, k) == tables[s + 1](n, k)


def test_row_sums_are_g():
    t = build_e_table(3, 6)
    assert t.row_sums() == g_sequence(3, 6)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 4), st.integers(0, 9))
def test_table_properties(sigma, n):
    t = build_e_table(sigma, n)
    row = t.row(n)
    assert len(row) == (sigma + 1) * n + 1
    assert all(v == 0 for v in row[:n])
    assert all(v > 0 for v in row[n:])
    assert sum(row) == g(sigma, n)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(1, 8))
def test_g_strictly_increasing(sigma, n):
    assert g(sigma, n) > g(sigma, n - 1)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 30), st.integers(0, 33))
def test_binomial_pascal(k, i):
    assert binomial(k + 1, i + 1) == binomial(k, i) + binomial(k, i + 1)
    assert binomial(k, -1 - i) == 0
