from fractions import Fraction
from math import factorial

import pytest

from dunkl_dihedral import singular
from dunkl_dihedral.field import ParamRat, poch_forms
from dunkl_dihedral.harmonic import lambda_const
from dunkl_dihedral.kernels import poisson_p
from dunkl_dihedral.multipoly import MultiPoly
from dunkl_dihedral.singular import (
    EpsilonRat,
    UnpairedPoleError,
    VerificationReport,
    check_basis_collapse,
    check_k_removable,
    check_lambda_ratios,
    check_pzero,
    check_v_removable,
    epsilon_substitute,
    kernel_pairing,
    restrict,
    restrict_poly,
    ungrouped_kernel_orders,
    v_pairing,
)

H = Fraction(1, 2)
EPS = ParamRat.k1()


def test_epsilon_substitute_examples():
    for m in (1, 2, 3):
        assert epsilon_substitute(ParamRat.affine(1, 1, m), m) == EpsilonRat(EPS)
    x = epsilon_substitute(ParamRat.affine(2, 0, 1), 2)
    assert x == EpsilonRat(ParamRat.affine(2, 0, 1))
    assert str(epsilon_substitute(ParamRat.affine(1, 1, 2), 2)) == "eps"


@pytest.mark.parametrize("s,m,n", [(1, 1, 1), (2, 1, 2), (2, 1, 5), (3, 2, 6), (3, 2, 9)])
def test_gamma_pochhammer_has_one_eps_factor(s, m, n):
    # n >= sm so one factor of (gamma0)_n vanishes on the line
    x = epsilon_substitute(ParamRat.from_factors(1, (), poch_forms((s, s, 1), n)), m)
    assert x.eps_order == 1
    assert not x.is_finite
    with pytest.raises(ArithmeticError):
        x.at_zero()


def test_epsilon_arithmetic():
    x = epsilon_substitute(ParamRat.from_factors(1, poch_forms((2, 2, 1), 3), ()), 1)
    assert x == EpsilonRat(ParamRat(8 * EPS.num * EPS.num * EPS.num - 2 * EPS.num))
    y = EpsilonRat(ParamRat(1, [(0, 1, 0)]))
    assert (x * y).is_finite and (x * y).at_zero() == ParamRat(-2)
    assert (y + y).eps_order == 1


def test_restrict():
    assert restrict(ParamRat.affine(1, 1, 3), 3).is_zero()
    assert restrict(ParamRat.k1(), 2) == ParamRat.affine(-1, 0, -2)


def test_basis_collapse_examples():
    assert check_basis_collapse(1, 0).ok
    report = check_basis_collapse(2, 1)
    assert report.ok and {"f0_even", "f_even_to_odd"} <= set(report.checked)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_all_propositions(m):
    for n in range(2 * m + 3):
        assert check_basis_collapse(m, n).ok
        assert check_lambda_ratios(m, n).ok


@pytest.mark.parametrize("m", [1, 2, 3])
def test_lambda_top_values(m):
    assert restrict(lambda_const(2 * m, "f1"), m).is_zero()
    # -(m! / (k0 + 1/2)_m)^2
    root = ParamRat.from_factors(factorial(m), (), poch_forms((1, 0, H), m))
    assert restrict(lambda_const(2 * m, "f0"), m) == root * root * -1


@pytest.mark.parametrize("s,m", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_pzero(s, m):
    for N in range(2 * s * m + 5):
        assert check_pzero(s, m, N).ok
    assert restrict_poly(poisson_p(s, s * m), m).is_zero()
    top = MultiPoly({(s * m,) * 4: -1}, 4)
    assert restrict_poly(poisson_p(s, 2 * s * m), m) == top


def test_pzero_beyond_range():
    assert restrict_poly(poisson_p(2, 5), 1).is_zero()
    # without the restriction P_5 is nonzero
    assert not poisson_p(2, 5).is_zero()


def test_kernel_pairing_examples():
    assert kernel_pairing(2, 1, 1) == [(0,)]
    assert kernel_pairing(2, 1, 3) == [(0, 1)]
    # self-paired: n - 2 j0 = ms
    assert (1,) in kernel_pairing(2, 1, 4)


@pytest.mark.parametrize("s,m", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_kernel_removable(s, m):
    for n in range(1, 2 * s * m + 3):
        report = check_k_removable(s, m, n)
        assert report.ok
        orders = ungrouped_kernel_orders(s, m, n)
        paired = {j for g in kernel_pairing(s, m, n) if len(g) == 2 for j in g}
        # an individual term is singular exactly when it sits in a pair
        assert {j for j, o in orders.items() if o > 0} == paired
        if n < s * m:
            assert not paired


def test_kernel_example_s2_m1_n3():
    report = check_k_removable(2, 1, 3)
    assert report.ok and report.params["singular_terms"] == [0, 1]


def test_ungrouped_kernel_fails(monkeypatch):
    monkeypatch.setattr(singular, "kernel_pairing", lambda g, m, n: [(j,) for j in range(n // 2 + 1)])
    with pytest.raises(UnpairedPoleError):
        check_k_removable(2, 1, 3)


def test_v_pairing_examples():
    # u + v - m < 0: nothing to pair
    assert v_pairing(2, 2, 0, 2) == []
    assert v_pairing(2, 5, 1, 1) == []
    for s, a, b, m in [(2, 7, 3, 2), (3, 9, 3, 1), (2, 6, 1, 1)]:
        pairs = v_pairing(s, a, b, m)
        flat = [k for p in pairs for k in p]
        assert len(flat) == len(set(flat))


@pytest.mark.parametrize("s", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2])
def test_v_removable(s, m):
    for n in range(2 * s * m + 3):
        for b in range(n // 2 + 1):
            assert check_v_removable(s, n - b, b, m).ok


def test_v_example_s2_m1():
    assert check_v_removable(2, 5, 1, 1).ok


def test_ungrouped_v_fails(monkeypatch):
    hits = [(s, a, b, m) for s, a, b, m in [(2, 2, 1, 1), (2, 4, 2, 2), (1, 2, 2, 1)] if v_pairing(s, a, b, m)]
    assert len(hits) == 3
    monkeypatch.setattr(singular, "v_pairing", lambda g, a, b, m: [])
    for s, a, b, m in hits:
        with pytest.raises(UnpairedPoleError):
            check_v_removable(s, a, b, m)


def test_report_records_first_failure():
    r = VerificationReport("demo", {"m": 1})
    r.record("a", True)
    r.record("b", False, {"x": 1})
    r.record("c", False, {"x": 2})
    assert not r.ok
    assert r.witness == {"identity": "b", "x": 1}
    assert r.checked == ["a", "b", "c"]
    assert r.dumps() == '{"identity": "demo", "params": {"m": 1}, "status": "fail", "witness": {"identity": "b", "x": 1}}'
