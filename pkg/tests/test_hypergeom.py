from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dunkl_dihedral.field import K0, K1, ParamRat
from dunkl_dihedral.hypergeom import (
    DegenerateDenominator,
    EParams,
    contiguity_check,
    e_fn,
    e_fn_alt,
    jacobi_coeffs,
    symmetry_check,
)

H = Fraction(1, 2)


def test_e_zero_and_one():
    assert e_fn(0, EParams(K0, K1, H, H)) == ParamRat.one()
    # hand expansion of the two-term sum
    assert e_fn(1, EParams(K0, K1, H, 3 * H)) == ParamRat.affine(Fraction(3, 4), Fraction(-1, 4), 0)


@pytest.mark.parametrize("n", range(1, 8))
def test_e_vanishes_at_zero_parameters(n):
    assert e_fn(n, EParams(0, 0, H, 3 * H)).is_zero()
    assert e_fn(n, EParams(0, 0, 2 + H, 2 + H)).is_zero()


def test_degenerate_denominator():
    with pytest.raises(DegenerateDenominator):
        e_fn(2, EParams(K0, K1, -1, 0))
    with pytest.raises(ValueError):
        e_fn(-1, EParams(K0, K1, H, H))


@given(st.integers(0, 10), st.integers(0, 4), st.sampled_from([0, 1]))
def test_two_forms_agree(n, j, shift):
    p = EParams(K0, K1, j + H, j + H + shift)
    assert e_fn(n, p) == e_fn_alt(n, p)


@given(st.integers(0, 10), st.integers(0, 4), st.integers(0, 4))
def test_symmetry(n, i, j):
    assert symmetry_check(n, EParams(K0, K1, i + H, j + H))


@given(st.integers(0, 10), st.integers(0, 3))
def test_contiguity(m, j):
    assert contiguity_check(m, K0, K1, j + H) == (True, True)


def test_chebyshev_coefficients():
    assert jacobi_coeffs(1, -H, -H) == [ParamRat(H), ParamRat(-1)]


@pytest.mark.parametrize("n", range(7))
def test_jacobi_coefficients_against_scipy(n):
    from scipy.special import eval_jacobi

    alpha, beta = 0.3, 1.7
    coeffs = jacobi_coeffs(n, K0 - H, K1 - H)
    for t in (-0.9, -0.2, 0.4, 0.95):
        x = (1 - t) / 2
        value = sum(float(c.evaluate(alpha + 0.5, beta + 0.5)) * x**k for k, c in enumerate(coeffs))
        assert abs(value - eval_jacobi(n, alpha, beta, t)) < 1e-10
