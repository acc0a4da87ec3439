"""Terminating 3F2-type sums E_n(a, b; c1, c2) and Jacobi coefficients.

All parameters are affine in (k0, k1): LinearForms, affine ParamPolys,
``(a, b, c)`` triples, or plain rationals.  Every sum is accumulated as a
polynomial over a Pochhammer denominator and reduced once at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .field import ParamPoly, ParamRat, _affine_triple, poch_forms, pochhammer


class DegenerateDenominator(ZeroDivisionError):
    """A Pochhammer denominator vanishes identically."""


def affine(x) -> ParamPoly:
    """Coerce a parameter to an affine ParamPoly."""
    if isinstance(x, ParamRat):
        if x.den or x.num.total_degree() > 1:
            raise ValueError(f"parameter {x} is not affine")
        return x.num * x.scale
    return ParamPoly.affine(*_affine_triple(x))


@dataclass(frozen=True)
class EParams:
    a: object
    b: object
    c1: object
    c2: object

    def polys(self) -> tuple:
        return tuple(affine(x) for x in (self.a, self.b, self.c1, self.c2))

    def swapped(self) -> "EParams":
        return EParams(self.b, self.a, self.c2, self.c1)


def _rat(num: ParamPoly, const: Fraction, den_base: ParamPoly, n: int) -> ParamRat:
    """``const * num / (den_base)_n``, raising if the Pochhammer is identically 0."""
    forms = poch_forms(den_base, n)
    for f in forms:
        if f[0] == 0 and f[1] == 0 and f[2] == 0:
            raise DegenerateDenominator(f"({den_base})_{n} vanishes identically")
    return ParamRat(num, forms, const)


def e_fn(n: int, p: EParams) -> ParamRat:
    """E_n(a, b; c1, c2) from its defining finite sum."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a, b, c1, c2 = p.polys()
    num = ParamPoly()
    for j in range(n + 1):
        w = pochhammer(-n, j) * Fraction(1, factorial(j))
        if w.is_zero():
            continue
        num = num + w * pochhammer(a, n - j) * pochhammer(b, j) * pochhammer(c1, j) * pochhammer(c2, n - j)
    return _rat(num, Fraction(1, factorial(n)), c1 + c2, n)


def e_fn_alt(n: int, p: EParams) -> ParamRat:
    """E_n via the transformed 3F2 with upper parameter n+a+b+c1+c2-1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a, b, c1, c2 = p.polys()
    top = a + b + c1 + c2 + (n - 1)
    c12 = c1 + c2
    num = ParamPoly()
    # (a+c1)_n / (a+c1)_j = (a+c1+j)_{n-j}; bring 1/(c1+c2)_j over (c1+c2)_n
    for j in range(n + 1):
        w = pochhammer(-n, j) * Fraction(1, factorial(j))
        num = num + (
            w
            * pochhammer(top, j)
            * pochhammer(c1, j)
            * pochhammer(a + c1 + j, n - j)
            * pochhammer(c12 + j, n - j)
        )
    return _rat(num, Fraction(1, factorial(n)), c12, n)


def symmetry_check(n: int, p: EParams) -> bool:
    return e_fn(n, p) == e_fn(n, p.swapped()) * (-1) ** n


def contiguity_check(m: int, a, b, c) -> tuple[bool, bool]:
    """Check the two contiguity relations linking E_m at (c, c+1), (c+1, c), (c, c)."""
    a, b, c = affine(a), affine(b), affine(c)
    left = e_fn(m, EParams(a, b, c, c + 1)) * ParamRat(a + c + m)
    right = e_fn(m, EParams(a, b, c + 1, c)) * ParamRat(b + c + m)
    minus_ok = left - right == e_fn(m + 1, EParams(a, b, c, c)) * (2 * (m + 1))
    # the plus relation carries a 1/(2c+1); compare after multiplying through
    plus_lhs = (left + right) * ParamRat(c * 2 + 1)
    plus_rhs = e_fn(m, EParams(a, b, c + 1, c + 1)) * ParamRat((c * 2 + (m + 1)) * (a + b + c * 2 + m))
    return minus_ok, plus_lhs == plus_rhs


def jacobi_coeffs(n: int, alpha, beta) -> list:
    """Coefficients of P_n^(alpha, beta) in powers of x = (1 - t)/2."""
    al, be = affine(alpha), affine(beta)
    out = []
    top = al + be + (n + 1)
    for k in range(n + 1):
        # (alpha+1)_n / (alpha+1)_k = (alpha+1+k)_{n-k}
        num = pochhammer(-n, k) * pochhammer(top, k) * pochhammer(al + (1 + k), n - k)
        out.append(ParamRat(num, (), Fraction(1, factorial(n) * factorial(k))))
    return out


__all__ = [
    "DegenerateDenominator",
    "EParams",
    "affine",
    "contiguity_check",
    "e_fn",
    "e_fn_alt",
    "jacobi_coeffs",
    "symmetry_check",
]
