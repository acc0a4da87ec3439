"""Poisson kernels P_N(z, w), the kernels K_n(z, w) and V read off from K_n.

Kernel polynomials have arity 4 with exponent order (z, zbar, w, wbar).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .dunkl import as_group
from .field import ParamPoly, ParamRat, _affine_triple, poch_forms
from .harmonic import f_coeff_form, lambda_const, nu_inv
from .multipoly import MultiPoly


def _pair(h: MultiPoly) -> MultiPoly:
    """h(z, zbar) * h(wbar, w) as a kernel polynomial."""
    return h.in_z() * h.in_w().swap_w()


@lru_cache(maxsize=None)
def poisson_p(g, N: int) -> MultiPoly:
    """The reproducing kernel of the degree-N harmonic space."""
    s = as_group(g).s
    if N < 0:
        raise ValueError("N must be >= 0")
    if N == 0:
        return MultiPoly.one(4)
    n, t = divmod(N, s)
    if t:
        h = f_coeff_form(n).substitute_power(s).shift(t, 0)
        term = _pair(h)
        return (term + term.conjugate_swap()).scalar_mul(lambda_const(n))
    out = MultiPoly.zero(4)
    for variant in ("f0", "f1"):
        lam = lambda_const(n, variant)
        if not lam.is_zero():
            out = out + _pair(f_coeff_form(n, variant).substitute_power(s)).scalar_mul(lam)
    return out


def poisson_biorthogonal(g, n: int) -> MultiPoly:
    """P_{ns} through the biorthogonal pair {f_n(z^s)}, {z^s f_{n-1}(z^s)}, n >= 1."""
    s = as_group(g).s
    fz = f_coeff_form(n).substitute_power(s).in_z()
    dual = f_coeff_form(n - 1).substitute_power(s).shift(s, 0)
    term = fz * dual.in_w().swap_w()
    return (term + term.conjugate_swap()).scalar_mul(nu_inv(n))


def _gamma(g) -> tuple:
    s = as_group(g).s
    return (s, s, 1)


@lru_cache(maxsize=None)
def kernel_k(g, n: int) -> MultiPoly:
    """K_n as a finite sum of Poisson kernels."""
    g = as_group(g)
    out = MultiPoly.zero(4)
    for j in range(n // 2 + 1):
        c = ParamRat.from_factors(Fraction(1, factorial(j) * 2**n), (), poch_forms(_gamma(g), n - j))
        out = out + poisson_p(g, n - 2 * j).shift(j, j, j, j).scalar_mul(c)
    return out


def poisson_from_kernels(g, n: int) -> MultiPoly:
    """P_n rebuilt from K_n, K_{n-2}, ... through the forward relation."""
    gamma = _affine_triple(_gamma(g))
    out = MultiPoly.zero(4)
    for j in range(n // 2 + 1):
        c = ParamRat.from_factors(
            Fraction(2 ** (n - 2 * j), factorial(j)),
            poch_forms(gamma, n),
            poch_forms((-gamma[0], -gamma[1], 2 - n - gamma[2]), j),
        )
        out = out + kernel_k(g, n - 2 * j).shift(j, j, j, j).scalar_mul(c)
    return out


# ---------------------------------------------------------------------------
# the inversion pair on abstract sequences
# ---------------------------------------------------------------------------


def _combine(items, coeffs):
    out = None
    for x, c in zip(items, coeffs):
        if isinstance(x, MultiPoly):
            term = x.scalar_mul(c)
        else:
            term = [v * c for v in x]
        if out is None:
            out = term
        elif isinstance(term, MultiPoly):
            out = out + term
        else:
            out = [p + q for p, q in zip(out, term)]
    return out


def _as_affine(gamma0) -> tuple:
    if isinstance(gamma0, ParamRat):
        if gamma0.den:
            raise ValueError("gamma0 must be affine in (k0, k1)")
        gamma0 = gamma0.num * gamma0.scale
    return _affine_triple(gamma0)


def eta_from_xi(xi: Sequence, gamma0) -> list:
    """eta_n = sum_j xi_{n-2j} / (j! (gamma0)_{n-j})."""
    gamma = _as_affine(gamma0)
    out = []
    for n in range(len(xi)):
        idx = range(n // 2 + 1)
        coeffs = [ParamRat.from_factors(Fraction(1, factorial(j)), (), poch_forms(gamma, n - j)) for j in idx]
        out.append(_combine([xi[n - 2 * j] for j in idx], coeffs))
    return out


def xi_from_eta(eta: Sequence, gamma0) -> list:
    """xi_n = sum_j (gamma0)_n / (j! (2 - n - gamma0)_j) eta_{n-2j}."""
    a, b, c = _as_affine(gamma0)
    out = []
    for n in range(len(eta)):
        idx = range(n // 2 + 1)
        coeffs = [
            ParamRat.from_factors(Fraction(1, factorial(j)), poch_forms((a, b, c), n), poch_forms((-a, -b, 2 - n - c), j))
            for j in idx
        ]
        out.append(_combine([eta[n - 2 * j] for j in idx], coeffs))
    return out


def _same(x, y) -> bool:
    if isinstance(x, MultiPoly):
        return x == y
    return len(x) == len(y) and all(p == q for p, q in zip(x, y))


def inversion_roundtrip(seq: Sequence, gamma0=None) -> bool:
    """True when xi -> eta -> xi and eta -> xi -> eta both return ``seq``.

    ``gamma0`` stays symbolic; the default ``k0 + k1 + 1`` plays the role of
    a transcendental parameter.
    """
    if gamma0 is None:
        gamma0 = ParamPoly.affine(1, 1, 1)
    seq = list(seq)
    there = xi_from_eta(eta_from_xi(seq, gamma0), gamma0)
    back = eta_from_xi(xi_from_eta(seq, gamma0), gamma0)
    return all(_same(x, y) for x, y in zip(seq, there)) and all(_same(x, y) for x, y in zip(seq, back))


# ---------------------------------------------------------------------------
# V from the kernel
# ---------------------------------------------------------------------------


def v_from_kernel(g, n: int, m: int) -> MultiPoly:
    """V(z^{n-m} zbar^m) as 2^n m! (n-m)! times the w^m wbar^{n-m} coefficient of K_n."""
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    k = kernel_k(as_group(g), n)
    scale = 2**n * factorial(m) * factorial(n - m)
    terms = {(a, b): c * scale for (a, b, c_, d), c in k.terms.items() if (c_, d) == (m, n - m)}
    return MultiPoly(terms, 2)


__all__ = [
    "eta_from_xi",
    "inversion_roundtrip",
    "kernel_k",
    "poisson_biorthogonal",
    "poisson_from_kernels",
    "poisson_p",
    "v_from_kernel",
    "xi_from_eta",
]
