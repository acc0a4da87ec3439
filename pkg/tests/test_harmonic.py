from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dunkl_dihedral.dunkl import is_harmonic
from dunkl_dihedral.field import K0, K1, ParamRat, poch_forms
from dunkl_dihedral.harmonic import (
    VARIANTS,
    basis_H,
    chebyshev_t,
    circle_moment,
    coeff_f,
    f_coeff_form,
    f_definitional,
    inner_product,
    jacobi_moment,
    lambda_const,
    nu_const,
    quadrature_moment,
)
from dunkl_dihedral.hypergeom import EParams, e_fn
from dunkl_dihedral.multipoly import MultiPoly, Z, ZB, conjugate_swap

H = Fraction(1, 2)


def test_degree_zero_conventions():
    assert f_coeff_form(0) == MultiPoly.one()
    assert f_coeff_form(0, "f1").is_zero()
    assert lambda_const(0, "f0") == ParamRat.one()
    assert lambda_const(0, "f1").is_zero()


def test_degree_one():
    half = ParamRat.affine(1, 0, H) * H
    assert f_coeff_form(1, "f0") == (Z() + ZB()).scalar_mul(half)
    assert f_coeff_form(1) == f_coeff_form(1, "f0") + f_coeff_form(1, "f1")


def test_structural_constant_examples():
    assert lambda_const(2) == ParamRat.from_factors(1, [(1, 1, 1)], [(1, 0, H), (0, 1, H)])
    assert nu_const(1) == ParamRat.from_factors(2, [(1, 0, H), (0, 1, H)], [(1, 1, 1)])


@pytest.mark.parametrize("n", range(1, 5))
def test_coefficients_through_e_function(n):
    f = f_coeff_form(2 * n, "f0")
    for j in range(n + 1):
        lead = ParamRat.from_factors(Fraction(1, 4**j * factorial(j)), poch_forms((1, 1, n), j), ())
        expected = lead * e_fn(n - j, EParams(K0, K1, j + H, j + H))
        assert f.coeff(n + j, n - j) == expected
        assert coeff_f(2 * n, n + j, n - j, "f0") == expected


def test_coeff_f_negative_index():
    assert coeff_f(3, -1, 4).is_zero()


@pytest.mark.parametrize("n", range(9))
@pytest.mark.parametrize("variant", VARIANTS)
def test_two_constructions_agree(n, variant):
    assert f_coeff_form(n, variant) == f_definitional(n, variant)


@pytest.mark.parametrize("n", range(9))
def test_variant_symmetry(n):
    f0, f1 = f_coeff_form(n, "f0"), f_coeff_form(n, "f1")
    assert conjugate_swap(f0) == f0
    assert conjugate_swap(f1) == -f1
    assert f_coeff_form(n) == f0 + f1
    assert f_coeff_form(n).is_homogeneous(n)


def test_basis_examples():
    assert basis_H(2, 1) == (Z(), ZB())
    assert basis_H(3, 3) == tuple(f_coeff_form(1, v).substitute_power(3) for v in ("f0", "f1"))
    with pytest.raises(ValueError):
        basis_H(2, 0)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_basis_harmonic(s):
    for N in range(1, 9):
        for h in basis_H(s, N):
            assert h.is_homogeneous(N)
            assert is_harmonic(h, s), (s, N)


def test_chebyshev():
    assert chebyshev_t(0) == (1,)
    assert chebyshev_t(3) == (0, -3, 0, 4)


def test_moment_examples():
    assert jacobi_moment(0) == ParamRat.one()
    assert jacobi_moment(1) == ParamRat.from_factors(1, [(-1, 1, 0)], [(1, 1, 1)])
    assert circle_moment(2, 3, 3) == ParamRat.one()
    assert circle_moment(2, 3, 0).is_zero()
    assert circle_moment(2, 2, 0).is_zero()
    assert circle_moment(2, 4, 0) == jacobi_moment(1)
    with pytest.raises(ValueError):
        circle_moment(2, -1, 0)


@pytest.mark.parametrize("kappa", [(0.3, 0.7), (1.25, 0.5), (2.0, 3.0)])
def test_moments_match_quadrature(kappa):
    for j in range(13):
        assert abs(float(jacobi_moment(j).evaluate(*kappa)) - quadrature_moment(j, *kappa)) < 1e-9


@pytest.mark.parametrize("s", [1, 2])
def test_norms_and_pairings(s):
    assert inner_product(MultiPoly.one(), MultiPoly.one(), s) == ParamRat.one()
    for n in range(1, 7):
        f = f_coeff_form(n).substitute_power(s)
        f0 = f_coeff_form(n, "f0").substitute_power(s)
        f1 = f_coeff_form(n, "f1").substitute_power(s)
        assert inner_product(f0, f0, s) * lambda_const(n, "f0") == ParamRat.one()
        assert inner_product(f1, f1, s) * lambda_const(n, "f1") == ParamRat.one()
        assert inner_product(f, f, s) * lambda_const(n) == ParamRat.one()
        assert inner_product(f0, f1, s).is_zero()
        prev = f_coeff_form(n - 1).substitute_power(s)
        assert inner_product(f, prev.shift(s, 0), s) == nu_const(n)
        assert inner_product(f, conjugate_swap(prev.shift(s, 0)), s).is_zero()


@given(st.integers(1, 3), st.integers(0, 5), st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))
def test_inner_product_symmetric(s, a, b, c, d):
    f, g = MultiPoly.monomial(a, b), MultiPoly.monomial(c, d)
    assert inner_product(f, g, s) == inner_product(g, f, s)
