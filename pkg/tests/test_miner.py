from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from giftex.miner import (FitSpec, NonUniqueFit, UnderdeterminedFit, echelon, fit, fit_1d, fit_2d,
                          minimal_depth, nullspace, primitive)
from giftex.poly import PolyCoeff
from giftex.recurrences import recurrence_from_json, registry, verify

R = registry()


def _mat_vec(m, v):
    return [sum(Fraction(a) * b for a, b in zip(row, v)) for row in m]


def test_nullspace_examples():
    assert nullspace([[1, 0], [0, 1]]) == []
    assert len(nullspace([[0, 0], [0, 0]])) == 2
    (v,) = nullspace([[1, 2], [2, 4]])
    assert primitive(v) == [-2, 1]


def test_nullspace_empty_matrix():
    assert len(nullspace([], ncols=3)) == 3
    with pytest.raises(ValueError):
        nullspace([])


def test_echelon_pivots_leftmost():
    _, piv = echelon([[0, 2, 1], [0, 4, 2], [3, 0, 0]])
    assert piv == [0, 1]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(1, 7), st.data())
def test_nullspace_is_kernel_with_rank_nullity(rows, cols, data):
    entry = st.fractions(min_value=-9, max_value=9, max_denominator=4)
    m = [[data.draw(entry) for _ in range(cols)] for _ in range(rows)]
    basis = nullspace(m)
    for v in basis:
        assert all(x == 0 for x in _mat_vec(m, v))
    _, piv = echelon(m)
    assert len(basis) + len(piv) == cols


def test_fit_g1():
    rec = fit_1d(FitSpec("G", 1, 2, 1))
    assert rec.coefficients() == R["G1d"].coefficients()


def test_fit_g0():
    rec = fit_1d(FitSpec("G", 0, 1, 0))
    assert rec.coefficients() == {1: PolyCoeff.const(1)}


def test_fit_g2():
    rec = fit_1d(FitSpec("G", 2, 4, 2))
    assert rec.coefficients() == R["G2d"].coefficients()
    assert rec.coefficients()[1] == PolyCoeff.parse("(9n^2 - 9n - 3)/2")


def test_fit_e1_e2():
    assert fit_2d(FitSpec("E", 1, 2, 1)).coefficients() == R["E1d"].coefficients()
    assert fit_2d(FitSpec("E", 2, 4, 2)).coefficients() == R["E2d"].coefficients()


def test_fit_e3_pruned():
    rec = fit_2d(FitSpec("E", 3, 7, 3, prune=True))
    assert rec.coefficients() == R["E3app"].coefficients()


def test_generalized_fit_recovers_g2e():
    rec = fit_1d(FitSpec("G", 2, 3, 3, generalized=True))
    assert rec.leading == R["G2e"].leading
    assert rec.coefficients() == R["G2e"].coefficients()


def test_too_shallow_gives_none():
    assert fit_1d(FitSpec("G", 2, 3, 2)) is None
    assert fit(FitSpec("G", 2, 3, 2)).status == "none"


def test_too_deep_is_non_unique():
    res = fit(FitSpec("G", 1, 4, 1))
    assert res.status == "non-unique" and res.dimension > 1
    with pytest.raises(NonUniqueFit):
        fit_1d(FitSpec("G", 1, 4, 1))


def test_underdetermined():
    with pytest.raises(UnderdeterminedFit):
        fit(FitSpec("E", 2, 4, 2, train=(4, 4)))


def test_bad_specs():
    with pytest.raises(ValueError):
        FitSpec("X", 1, 2, 1)
    with pytest.raises(ValueError):
        FitSpec("E", 1, 2, 1, generalized=True)
    with pytest.raises(ValueError):
        fit_1d(FitSpec("E", 1, 2, 1))


def test_unknown_counts():
    assert FitSpec("G", 2, 4, 2).unknowns() == 12
    assert FitSpec("E", 2, 4, 2).unknowns() == 14 * 3
    assert FitSpec("E", 3, 7, 3).unknowns() == 35 * 4


def test_mined_recurrence_survives_long_holdout():
    res = fit(FitSpec("E", 2, 4, 2))
    lo, hi = res.train
    assert verify(res.recurrence, hi + 2 * (hi - lo + 1), n_min=hi + 1).passed


def test_mined_json_round_trip():
    rec = fit_2d(FitSpec("E", 2, 4, 2))
    assert recurrence_from_json(rec.to_json()).coefficients() == rec.coefficients()


@pytest.mark.parametrize("target,sigma,expected", [("E", 0, 1), ("E", 1, 2), ("E", 2, 4), ("G", 0, 1), ("G", 1, 2),
                                                   ("G", 2, 4), ("G", 3, 7)])
def test_minimal_depth(target, sigma, expected):
    assert minimal_depth(target, sigma) == expected


def test_minimal_depth_unresolved_on_budget():
    assert minimal_depth("E", 3, max_unknowns=30) is None


@pytest.mark.slow
def test_g4_mining_settles_offset():
    rec = fit_1d(FitSpec("G", 4, 11, 4))
    assert rec.coefficients() == R["G4e-corrected"].coefficients()
    assert rec.coefficients() != R["G4e"].coefficients()
