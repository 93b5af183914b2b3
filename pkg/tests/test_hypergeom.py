from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from giftex.core import build_e_table, g_sequence
from giftex.hypergeom import (PHI1, PHI2, NonTerminating, _e2_high, _e2_low, asym_ratio, asym_ratio_exact,
                              e2_via_2f1, e_approx, g1_via_2f0, g2_via_2f1, hyp_terminating,
                              phi_identity_check, to_decimal)

Z_VALUES = [Fraction(8, 3), Fraction(2, 5), Fraction(-1), Fraction(7, 2), Fraction(13, 9)]


def test_terminating_examples():
    assert hyp_terminating([0, Fraction(1, 2)], [2], Fraction(8, 3)) == 1
    assert hyp_terminating([-1, 1], [2], Fraction(8, 3)) == Fraction(-1, 3)
    assert hyp_terminating([2, -1], [], Fraction(-1, 2)) == 2


def test_terminating_errors():
    with pytest.raises(NonTerminating):
        hyp_terminating([Fraction(1, 2), 1], [2], 1)
    with pytest.raises(ZeroDivisionError):
        hyp_terminating([-3, 1], [-1], 1)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 8), st.fractions(min_value=-3, max_value=3, max_denominator=7))
def test_terminating_is_polynomial_sum(m, z):
    # 1F0[-m;;z] = (1 - z)^m
    assert hyp_terminating([-m], [], z) == (1 - z) ** m


def test_g1_forms():
    assert g1_via_2f0(2) == 7 and g1_via_2f0(0) == 1 and g1_via_2f0(4) == 266
    assert [g1_via_2f0(n) for n in range(51)] == g_sequence(1, 50)


def test_e2_examples():
    assert e2_via_2f1(2, 3) == 3
    assert e2_via_2f1(1, 3) == 1
    assert e2_via_2f1(3, 5) == 25
    with pytest.raises(ValueError):
        e2_via_2f1(3, 10)


def test_e2_matches_table():
    t = build_e_table(2, 20)
    for n in range(21):
        for k in range(n, 3 * n + 1):
            assert e2_via_2f1(n, k) == t(n, k)


def test_e2_branches_agree_at_eta_equal_n():
    for n in range(21):
        assert _e2_low(n, n) == _e2_high(n, n)


def test_g2_forms():
    assert g2_via_2f1(2) == 31 and g2_via_2f1(0) == 1 and g2_via_2f1(3) == 842
    assert [g2_via_2f1(n) for n in range(21)] == g_sequence(2, 20)


def test_phi_identity():
    for n in range(1, 9):
        for eta in range(n + 1, 2 * n + 1):
            for z in Z_VALUES:
                assert phi_identity_check(n, eta, z), (n, eta, z)


def test_phi_identity_guards():
    with pytest.raises(ValueError):
        phi_identity_check(4, 4, Fraction(2, 5))
    with pytest.raises(ZeroDivisionError):
        phi_identity_check(4, 6, 1)


def test_phi_negative_controls():
    bumped = list(PHI1)
    bumped[3] = f"({bumped[3]}) + 1"
    assert not phi_identity_check(6, 9, Fraction(2, 5), phi1=bumped)
    bumped2 = list(PHI2)
    bumped2[0] = f"({bumped2[0]}) - n"
    assert not phi_identity_check(6, 9, Fraction(2, 5), phi2=bumped2)
    # without the (eta - n + 1) weight on the phi_2 term the identity breaks
    assert not phi_identity_check(5, 7, Fraction(2, 5), phi2_weight="1")


def test_phi_degrees():
    assert len(PHI1) == 7 and len(PHI2) == 6


def test_asym_examples():
    assert asym_ratio_exact(1, 4) == Fraction(266, 105)
    assert asym_ratio(1, 4, 5) == "2.53333"
    assert asym_ratio_exact(1, 1) == 2
    assert asym_ratio_exact(2, 1) == Fraction(3 * 6, 6)
    with pytest.raises(ValueError):
        asym_ratio_exact(1, 0)


def test_asym_converges():
    e = e_approx(40)
    for sigma in (1, 2):
        for m in (10, 25, 50):
            assert abs(asym_ratio_exact(sigma, 2 * m) - e) < abs(asym_ratio_exact(sigma, m) - e)


def test_decimal_rendering():
    assert to_decimal(Fraction(2, 3), 4) == "0.6667"
    assert to_decimal(Fraction(-5, 2), 0) == "-3"
    assert to_decimal(Fraction(7), 2) == "7.00"
    assert to_decimal(e_approx(20), 20) == "2.71828182845904523536"
