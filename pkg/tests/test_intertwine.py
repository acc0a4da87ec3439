from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dunkl_dihedral.dunkl import apply_T, apply_Tbar, is_harmonic
from dunkl_dihedral.field import ParamRat
from dunkl_dihedral.harmonic import coeff_f
from dunkl_dihedral.intertwine import (
    InconsistentSystemError,
    MonomialCase,
    SingularParameterError,
    check_nonsingular,
    intertwine_antisym,
    intertwine_mono,
    intertwine_poly,
    intertwine_sym,
    oracle_v,
    solve_exact,
    theorem_coeff_first,
    theorem_coeff_second,
    v_terms,
)
from dunkl_dihedral.multipoly import MultiPoly, Z, ZB, conjugate_swap
from strategies import homogeneous

F = Fraction
PARAMS = (F(3, 7), F(5, 11))


def test_degree_zero_and_one():
    for s in (1, 2, 3):
        assert intertwine_mono(s, 0, 0) == MultiPoly.one()
    for s in (2, 3, 4):
        assert intertwine_mono(s, 1, 0) == Z().scalar_mul(ParamRat.from_factors(1, (), [(s, s, 1)]))


@pytest.mark.parametrize("s", [3, 4, 5])
def test_vz2_for_larger_groups(s):
    assert intertwine_mono(s, 2, 0) == MultiPoly({(2, 0): ParamRat.from_factors(2, (), [(s, s, 1), (s, s, 2)])})


def test_monomial_case():
    c = MonomialCase.of(3, 8, 4)
    assert (c.kind, c.u, c.v, c.r, c.t) == ("shifted", 2, 1, 1, 1)
    c = MonomialCase.of(2, 7, 3)
    assert (c.kind, c.u, c.v, c.r, c.t) == ("congruent", 3, 1, 1, 0)
    with pytest.raises(ValueError):
        MonomialCase.of(2, 1, 3)


def test_sym_parts_need_congruence():
    with pytest.raises(ValueError):
        intertwine_sym(2, 3, 0)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_sym_antisym_decomposition(s):
    for n in range(9):
        for b in range(n // 2 + 1):
            a = n - b
            if (a - b) % s == 0:
                sym, anti = intertwine_sym(s, a, b), intertwine_antisym(s, a, b)
                assert sym + anti == intertwine_mono(s, a, b)
                both = MultiPoly.monomial(a, b) + MultiPoly.monomial(b, a)
                assert intertwine_poly(s, both) == sym.scalar_mul(2)
                assert conjugate_swap(sym) == sym
                assert conjugate_swap(anti) == -anti
    assert intertwine_antisym(s, 3, 3).is_zero()


@pytest.mark.parametrize("s", [1, 2, 3])
def test_structure(s):
    for n in range(9):
        for b in range(n + 1):
            a = n - b
            v = intertwine_mono(s, a, b)
            assert v.is_homogeneous(n)
            assert intertwine_mono(s, b, a) == conjugate_swap(v)
            for (_, j) in v.terms:
                assert (j - b) % s == 0


@pytest.mark.parametrize("s", [1, 2, 3])
def test_no_low_order_harmonic_components(s):
    for n in range(1, 9):
        for b in range(n // 2 + 1):
            a = n - b
            for term in v_terms(s, a, b):
                assert term.poly.is_homogeneous(n - 2 * term.power)
                assert n - 2 * term.power >= a - b
                assert is_harmonic(term.poly, s)


def test_corrected_coefficient_forms():
    printed_first = printed_second = 0
    for u in range(8):
        for v in range(u + 1):
            for k in range(v + 1):
                first = coeff_f(u + v - 2 * k, u - k, v - k)
                second = coeff_f(u + v + 1 - 2 * k, v - k, u - k + 1)
                assert theorem_coeff_first(u, v, k) == first
                assert theorem_coeff_second(u, v, k) == second
                printed_first += theorem_coeff_first(u, v, k, printed=True) != first
                printed_second += theorem_coeff_second(u, v, k, printed=True) != second
    # the literal forms disagree with the harmonic coefficients
    assert printed_first == 34 and printed_second == 50


@given(st.integers(1, 3), st.integers(0, 5).flatmap(homogeneous))
def test_defining_property(s, f):
    v = intertwine_poly(s, f)
    assert apply_T(v, s) == intertwine_poly(s, f.derivative(0))
    assert apply_Tbar(v, s) == intertwine_poly(s, f.derivative(1))


@given(st.integers(1, 3), st.integers(0, 5).flatmap(homogeneous), st.integers(0, 5).flatmap(homogeneous))
def test_linear(s, f, g):
    assert intertwine_poly(s, f + g) == intertwine_poly(s, f) + intertwine_poly(s, g)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_oracle_agreement(s):
    for n in range(7):
        for b in range(n + 1):
            f = MultiPoly.monomial(n - b, b)
            assert oracle_v(s, f, *PARAMS).specialize(0, 0) == intertwine_mono(s, n - b, b).specialize(*PARAMS)


def test_oracle_golden_vz2():
    expected = {(2, 0): F(3, 7) + F(5, 11) + 1, (0, 2): F(3, 7) - F(5, 11)}
    den = (2 * F(3, 7) + 1) * (2 * F(5, 11) + 1) * (2 * F(3, 7) + 2 * F(5, 11) + 1)
    expected = {e: c / den for e, c in expected.items()}
    assert oracle_v(2, Z() ** 2, *PARAMS).specialize(0, 0) == expected


@pytest.mark.parametrize(
    "k0,k1",
    [(F(-1, 2), F(1)), (F(1), F(-5, 2)), (F(-1, 4), F(-1, 4)), (F(-1, 3), F(-2, 3))],
)
def test_singular_parameters_rejected(k0, k1):
    with pytest.raises(SingularParameterError):
        check_nonsingular(2, k0, k1)
    with pytest.raises(SingularParameterError):
        oracle_v(2, Z(), k0, k1)


def test_nonsingular_accepted():
    check_nonsingular(2, F(-1, 3), F(1, 7))
    check_nonsingular(3, F(-1, 5), F(0))


def test_solve_exact():
    assert solve_exact([[2, 1], [1, 3], [3, 4]], [F(5), F(10), F(15)]) == [F(1), F(3)]
    with pytest.raises(InconsistentSystemError):
        solve_exact([[1, 1], [1, 1]], [F(1), F(2)])
    with pytest.raises(InconsistentSystemError):
        solve_exact([[1, 1], [2, 2]], [F(1), F(2)])
