"""Harmonic polynomials f_n, f_n^0, f_n^1 and their structural constants.

Degree indices refer to the s = 1 family; the space of degree ns + t for
general s is spanned by substituted copies (see ``basis_H``).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .dunkl import as_group
from .field import K0, K1, ParamRat, poch_rat
from .hypergeom import EParams, e_fn, jacobi_coeffs
from .multipoly import MultiPoly

VARIANTS = ("f", "f0", "f1")
HALF = Fraction(1, 2)


def _check_variant(variant: str):
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")


def kappa_shift(c) -> tuple:
    """The affine form ``k0 + k1 + c``."""
    return (1, 1, c)


@lru_cache(maxsize=None)
def e_coeff(n: int, c1: Fraction, c2: Fraction) -> ParamRat:
    """E_n(k0, k1; c1, c2)."""
    return e_fn(n, EParams(K0, K1, c1, c2))


def _acc(out: dict, exps: tuple, c: ParamRat):
    if min(exps) < 0 or c.is_zero():
        return
    out[exps] = out[exps] + c if exps in out else c


# ---------------------------------------------------------------------------
# coefficient form
# ---------------------------------------------------------------------------


def _even(m: int, variant: str) -> dict:
    out: dict = {}
    if variant in ("f0", "f"):
        _acc(out, (m, m), e_coeff(m, HALF, HALF))
    for j in range(1, m + 1):
        e = e_coeff(m - j, j + HALF, j + HALF)
        hi, lo = (m + j, m - j), (m - j, m + j)
        if variant == "f0":
            c = poch_rat(kappa_shift(m), j) * e / (4**j * factorial(j))
            _acc(out, hi, c)
            _acc(out, lo, c)
        elif variant == "f1":
            c = poch_rat(kappa_shift(m + 1), j - 1) * e / (4**j * factorial(j - 1))
            _acc(out, hi, c)
            _acc(out, lo, -c)
        else:
            c = poch_rat(kappa_shift(m + 1), j - 1) * e / (4**j * factorial(j))
            _acc(out, hi, c * ParamRat.affine(1, 1, m + j))
            _acc(out, lo, c * ParamRat.affine(1, 1, m - j))
    return out


def _odd(m: int, variant: str) -> dict:
    out: dict = {}
    if variant == "f":
        for j in range(1, m + 2):
            c = poch_rat(kappa_shift(m + 1), j) * e_coeff(m + 1 - j, j + HALF, j + HALF) / (4**j * factorial(j))
            _acc(out, (m + j, m + 1 - j), c * (m + 1 + j))
            _acc(out, (m - j, m + 1 + j), c * (m + 1 - j))
        _acc(out, (m, m + 1), e_coeff(m + 1, HALF, HALF) * (m + 1))
        return out
    sign = 1 if variant == "f0" else -1
    lead = ParamRat.affine(1, 0, m + HALF) if variant == "f0" else ParamRat.affine(0, 1, m + HALF)
    for j in range(m + 1):
        if variant == "f0":
            e = e_coeff(m - j, j + HALF, j + Fraction(3, 2))
        else:
            e = e_coeff(m - j, j + Fraction(3, 2), j + HALF)
        c = lead * poch_rat(kappa_shift(m + 1), j) * e / (2 ** (2 * j + 1) * factorial(j))
        _acc(out, (m + 1 + j, m - j), c)
        _acc(out, (m - j, m + 1 + j), c * sign)
    return out


@lru_cache(maxsize=None)
def f_coeff_form(n: int, variant: str = "f") -> MultiPoly:
    """f_n (or its real/imaginary part) built from the E-function coefficients."""
    _check_variant(variant)
    if n < 0:
        raise ValueError("n must be >= 0")
    terms = _even(n // 2, variant) if n % 2 == 0 else _odd(n // 2, variant)
    return MultiPoly(terms, 2)


def coeff_f(n: int, a: int, b: int, variant: str = "f") -> ParamRat:
    """c(f_n; a, b); zero for negative n or exponents."""
    if n < 0 or a < 0 or b < 0:
        return ParamRat.zero()
    return f_coeff_form(n, variant).coeff(a, b)


# ---------------------------------------------------------------------------
# Jacobi (definitional) form
# ---------------------------------------------------------------------------

_Z, _ZB = MultiPoly.monomial(1, 0), MultiPoly.monomial(0, 1)


def _jacobi_in_z(n: int, alpha: tuple, beta: tuple) -> MultiPoly:
    """r^{2n} P_n^{(alpha, beta)}(cos 2theta) as a polynomial in z, zbar.

    Uses (1 - cos 2theta)/2 = -(z - zbar)^2 / (4 z zbar) and r^2 = z zbar.
    """
    diff2 = (_Z - _ZB) ** 2
    out = MultiPoly.zero()
    power = MultiPoly.one()
    for k, c in enumerate(jacobi_coeffs(n, alpha, beta)):
        if k:
            power = power * diff2
        out = out + power.shift(n - k, n - k).scalar_mul(c * Fraction(-1, 4) ** k)
    return out


@lru_cache(maxsize=None)
def f_definitional(n: int, variant: str = "f") -> MultiPoly:
    """f_n expanded from its Jacobi-polynomial definition."""
    _check_variant(variant)
    m = n // 2
    if n % 2 == 0:
        full = _jacobi_in_z(m, (1, 0, -HALF), (0, 1, -HALF))
        if m:
            full = full + (_Z**2 - _ZB**2) * _jacobi_in_z(m - 1, (1, 0, HALF), (0, 1, HALF)) * Fraction(1, 4)
    else:
        re = (_Z + _ZB) * _jacobi_in_z(m, (1, 0, -HALF), (0, 1, HALF))
        im = (_Z - _ZB) * _jacobi_in_z(m, (1, 0, HALF), (0, 1, -HALF))
        full = re.scalar_mul(ParamRat.affine(1, 0, m + HALF) / 2) + im.scalar_mul(ParamRat.affine(0, 1, m + HALF) / 2)
    if variant == "f":
        return full
    swapped = full.conjugate_swap()
    part = full + swapped if variant == "f0" else full - swapped
    return part * HALF


# ---------------------------------------------------------------------------
# structural constants
# ---------------------------------------------------------------------------


def _pochs(forms: list) -> list:
    out = []
    for base, k in forms:
        out.extend((base[0], base[1], base[2] + i) for i in range(k))
    return out


@lru_cache(maxsize=None)
def lambda_const(n: int, variant: str = "f") -> ParamRat:
    """Inverse squared norm of f_n, f_n^0 or f_n^1."""
    _check_variant(variant)
    m = n // 2
    kap1 = kappa_shift(1)
    if n % 2 == 0:
        if variant == "f1" and m == 0:
            return ParamRat.zero()
        den = _pochs([((1, 0, HALF), m), ((0, 1, HALF), m)])
        num = _pochs([(kap1, m)])
        if variant == "f0":
            return ParamRat.from_factors(factorial(m), num + [kappa_shift(2 * m)], den + [kappa_shift(m)])
        if variant == "f1":
            return ParamRat.from_factors(factorial(m - 1), num + [kappa_shift(2 * m)], den)
        return ParamRat.from_factors(factorial(m), num, den)
    den = _pochs([((1, 0, HALF), m + 1), ((0, 1, HALF), m + 1)])
    num = _pochs([(kap1, m)])
    if variant == "f0":
        return ParamRat.from_factors(factorial(m), num + [kappa_shift(2 * m + 1)], den + [(1, 0, m + HALF)])
    if variant == "f1":
        return ParamRat.from_factors(factorial(m), num + [kappa_shift(2 * m + 1)], den + [(0, 1, m + HALF)])
    return ParamRat.from_factors(factorial(m), num, den)


def _nu_parts(n: int) -> tuple:
    if n < 1:
        raise ValueError("nu is defined for n >= 1")
    m = n // 2
    if n % 2 == 0:
        top = _pochs([((1, 0, HALF), m), ((0, 1, HALF), m)])
        bottom = _pochs([(kappa_shift(1), m - 1)]) + [kappa_shift(2 * m)]
        return Fraction(2, factorial(m - 1)), top, bottom
    top = _pochs([((1, 0, HALF), m + 1), ((0, 1, HALF), m + 1)])
    bottom = _pochs([(kappa_shift(1), m)]) + [kappa_shift(2 * m + 1)]
    return Fraction(2, factorial(m)), top, bottom


@lru_cache(maxsize=None)
def nu_const(n: int) -> ParamRat:
    """The pairing <f_n(z^s), z^s f_{n-1}(z^s)>."""
    c, top, bottom = _nu_parts(n)
    return ParamRat.from_factors(c, top, bottom)


@lru_cache(maxsize=None)
def nu_inv(n: int) -> ParamRat:
    c, top, bottom = _nu_parts(n)
    return ParamRat.from_factors(1 / c, bottom, top)


# ---------------------------------------------------------------------------
# harmonic spaces for I2(2s)
# ---------------------------------------------------------------------------


def basis_H(g, N: int) -> tuple:
    """A basis of the harmonic polynomials of degree N >= 1."""
    s = as_group(g).s
    if N < 1:
        raise ValueError("basis_H needs N >= 1")
    n, t = divmod(N, s)
    if t:
        h = f_coeff_form(n).substitute_power(s).shift(t, 0)
        return h, h.conjugate_swap()
    return f_coeff_form(n, "f0").substitute_power(s), f_coeff_form(n, "f1").substitute_power(s)


# ---------------------------------------------------------------------------
# the measure on the circle
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _beta_moment(k: int) -> ParamRat:
    # E[x^k] for x = (1 + t)/2 ~ Beta(k1 + 1/2, k0 + 1/2)
    return ParamRat.from_factors(1, [(0, 1, HALF + i) for i in range(k)], [kappa_shift(1 + i) for i in range(k)])


@lru_cache(maxsize=None)
def jacobi_moment(j: int) -> ParamRat:
    """Normalized moment of t^j against (1 - t)^{k0 - 1/2} (1 + t)^{k1 - 1/2}."""
    out = ParamRat.zero()
    for k in range(j + 1):
        out = out + _beta_moment(k) * (comb(j, k) * 2**k * (-1) ** (j - k))
    return out


def quadrature_moment(j: int, k0: float, k1: float) -> float:
    """Numeric version of ``jacobi_moment`` by adaptive quadrature."""
    from scipy.integrate import quad

    wvar = (k1 - 0.5, k0 - 0.5)
    num = quad(lambda t: t**j, -1, 1, weight="alg", wvar=wvar, epsabs=1e-14, epsrel=1e-13)[0]
    den = quad(lambda t: 1.0, -1, 1, weight="alg", wvar=wvar, epsabs=1e-14, epsrel=1e-13)[0]
    return num / den


@lru_cache(maxsize=None)
def chebyshev_t(k: int) -> tuple:
    """Integer coefficients of T_k in powers of t."""
    prev, cur = [1], [0, 1]
    if k == 0:
        return tuple(prev)
    for _ in range(k - 1):
        nxt = [0] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return tuple(cur)


@lru_cache(maxsize=None)
def _circle_moment(s: int, d: int) -> ParamRat:
    if d % (2 * s):
        return ParamRat.zero()
    out = ParamRat.zero()
    for i, c in enumerate(chebyshev_t(abs(d) // (2 * s))):
        if c:
            out = out + jacobi_moment(i) * c
    return out


def circle_moment(g, a: int, b: int) -> ParamRat:
    """Integral of z^a zbar^b over the circle against the normalized measure."""
    if a < 0 or b < 0:
        raise ValueError("exponents must be >= 0")
    return _circle_moment(as_group(g).s, a - b)


def inner_product(f: MultiPoly, h: MultiPoly, g) -> ParamRat:
    s = as_group(g).s
    out = ParamRat.zero()
    for (a, b), cf in f.terms.items():
        for (c, d), ch in h.terms.items():
            # conj(z^c zbar^d) = z^d zbar^c on the circle
            mom = _circle_moment(s, (a + d) - (b + c))
            if not mom.is_zero():
                out = out + cf * ch * mom
    return out


__all__ = [
    "VARIANTS",
    "basis_H",
    "chebyshev_t",
    "circle_moment",
    "coeff_f",
    "e_coeff",
    "f_coeff_form",
    "f_definitional",
    "inner_product",
    "jacobi_moment",
    "lambda_const",
    "nu_const",
    "nu_inv",
    "quadrature_moment",
]
