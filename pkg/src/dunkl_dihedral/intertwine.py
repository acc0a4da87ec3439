"""The intertwining operator V on monomials.

``intertwine_mono`` evaluates the closed double sums over harmonic
polynomials.  ``oracle_v`` is independent of them: it solves the defining
relations T V = V d/dz, Tbar V = V d/dzbar degree by degree at a rational
parameter point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .dunkl import as_group, apply_rule_numeric, t_rule, tbar_rule
from .field import ParamRat, as_fraction, poch_forms
from .harmonic import HALF, coeff_f, e_coeff, f_coeff_form, lambda_const, nu_inv
from .multipoly import MultiPoly


class SingularParameterError(ValueError):
    """The parameter point lies on the singular set of V."""


class InconsistentSystemError(ArithmeticError):
    """The defining relations admit no solution at this degree."""


@dataclass(frozen=True)
class MonomialCase:
    """Residue data of z^a zbar^b, a >= b.

    ``kind`` is "congruent" when a = us + r, b = vs + r, and "shifted" when
    a = us + r + t, b = vs + r with 1 <= t < s.
    """

    a: int
    b: int
    s: int
    kind: str
    u: int
    v: int
    r: int
    t: int

    @classmethod
    def of(cls, g, a: int, b: int) -> "MonomialCase":
        s = as_group(g).s
        if a < b or b < 0:
            raise ValueError("need a >= b >= 0")
        v, r = divmod(b, s)
        t = (a - b) % s
        u = (a - r - t) // s
        return cls(a, b, s, "congruent" if t == 0 else "shifted", u, v, r, t)


def _gamma_poch_inv(s: int, n: int) -> ParamRat:
    return ParamRat.from_factors(1, (), poch_forms((s, s, 1), n))


@dataclass(frozen=True)
class VTerm:
    """One summand ``coeff * (z zbar)^power * poly`` of a V-expansion."""

    label: tuple
    coeff: ParamRat
    power: int
    poly: MultiPoly

    def expand(self) -> MultiPoly:
        return self.poly.shift(self.power, self.power).scalar_mul(self.coeff)


def _sub(n: int, variant: str, s: int, conj: bool = False) -> MultiPoly:
    f = f_coeff_form(n, variant).substitute_power(s)
    return f.conjugate_swap() if conj else f


def v_terms(g, a: int, b: int, part: str = "mono") -> list:
    """Summands of V(z^a zbar^b) for a >= b, labelled by (sum, k).

    ``part`` selects the monomial itself ("mono"), or for congruent exponents
    its symmetric ("sym") or antisymmetric ("antisym") half.
    """
    case = MonomialCase.of(g, a, b)
    s, u, v, r, t = case.s, case.u, case.v, case.r, case.t
    pre = factorial(a) * factorial(b)
    out = []
    if case.kind == "shifted":
        if part != "mono":
            raise ValueError("sym/antisym parts need a = b mod s")
        for k in range(v + 1):
            n = u + v - 2 * k
            c = lambda_const(n) * coeff_f(n, u - k, v - k)
            if c.is_zero():
                continue
            c = c * _gamma_poch_inv(s, a + (v - k) * s) * Fraction(pre, factorial(k * s + r))
            out.append(VTerm((1, k), c, k * s + r, _sub(n, "f", s).shift(t, 0)))
        for k in range(1 - (r + t) // s, v + 1):
            n = u + v + 1 - 2 * k
            c = lambda_const(n) * coeff_f(n, v - k, u - k + 1)
            if c.is_zero():
                continue
            j = (k - 1) * s + r + t
            c = c * _gamma_poch_inv(s, b + (u - k + 1) * s) * Fraction(pre, factorial(j))
            out.append(VTerm((2, k), c, j, _sub(n, "f", s, conj=True).shift(0, s - t)))
        return out
    for k in range(v + 1):
        n = u + v - 2 * k
        w = _gamma_poch_inv(s, b + (u - k) * s) * Fraction(pre, factorial(k * s + r))
        if part == "mono" and a > b:
            c1 = coeff_f(n - 1, u - k - 1, v - k)
            c2 = coeff_f(n - 1, v - k - 1, u - k)
            poly = _sub(n, "f", s).scalar_mul(c1) + _sub(n, "f", s, conj=True).scalar_mul(c2)
            if poly:
                out.append(VTerm((0, k), w * nu_inv(n), k * s + r, poly))
            continue
        variant = "f1" if part == "antisym" else "f0"
        c = lambda_const(n, variant) * coeff_f(n, u - k, v - k, variant)
        if c.is_zero():
            continue
        # a = b: the symmetric half is the monomial itself
        out.append(VTerm((0, k), w * c, k * s + r, _sub(n, variant, s)))
    return out


def _sum_terms(terms: list) -> MultiPoly:
    out = MultiPoly.zero()
    for term in terms:
        out = out + term.expand()
    return out


@lru_cache(maxsize=None)
def _mono(s: int, a: int, b: int) -> MultiPoly:
    if a < b:
        return _mono(s, b, a).conjugate_swap()
    if a == b == 0:
        return MultiPoly.one()
    if a == b:
        return _sum_terms(v_terms(s, a, b, "sym"))
    return _sum_terms(v_terms(s, a, b))


def intertwine_mono(g, a: int, b: int) -> MultiPoly:
    """V(z^a zbar^b)."""
    if a < 0 or b < 0:
        raise ValueError("exponents must be >= 0")
    return _mono(as_group(g).s, a, b)


def intertwine_sym(g, a: int, b: int) -> MultiPoly:
    """V((z^a zbar^b + z^b zbar^a)/2) for a = b mod s, a >= b."""
    return _sum_terms(v_terms(g, a, b, "sym"))


def intertwine_antisym(g, a: int, b: int) -> MultiPoly:
    """V((z^a zbar^b - z^b zbar^a)/2) for a = b mod s, a >= b."""
    if a == b:
        MonomialCase.of(g, a, b)
        return MultiPoly.zero()
    return _sum_terms(v_terms(g, a, b, "antisym"))


def intertwine_poly(g, f: MultiPoly) -> MultiPoly:
    out = MultiPoly.zero()
    for (a, b), c in f.terms.items():
        out = out + intertwine_mono(g, a, b).scalar_mul(c)
    return out


# ---------------------------------------------------------------------------
# coefficients c(f_m; ., .) in the shape they enter the theorems
# ---------------------------------------------------------------------------


def _kappa_poch(c, n: int) -> ParamRat:
    return ParamRat.from_factors(1, poch_forms((1, 1, c), n), ())


def theorem_coeff_first(u: int, v: int, k: int, printed: bool = False) -> ParamRat:
    """c(f_{u+v-2k}; u-k, v-k) in closed form.

    ``printed=True`` keeps the kappa Pochhammer of the even case starting at
    (u+v)/2 - k + k0 + k1; the default starts it one higher, which is what the
    harmonic coefficients require.
    """
    if (u + v) % 2 == 0:
        h = (u - v) // 2
        start = Fraction(u + v, 2) - k + (0 if printed else 1)
        c = _kappa_poch(start, h) / (2 ** (u - v) * factorial(h))
        return c * e_coeff(v - k, Fraction(u - v + 1, 2), Fraction(u - v + 1, 2))
    h = (u - v + 1) // 2
    c = _kappa_poch(Fraction(u + v + 1, 2) - k, h) * (u - k + 1) / (2 ** (u - v + 1) * factorial(h))
    return c * e_coeff(v - k, Fraction(u - v, 2) + 1, Fraction(u - v, 2) + 1)


def theorem_coeff_second(u: int, v: int, k: int, printed: bool = False) -> ParamRat:
    """c(f_{u+v+1-2k}; v-k, u-k+1) in closed form.

    In the odd case the linear factor is v - k + k0 + k1; ``printed=True``
    uses v - k + 1 instead.
    """
    if (u + v) % 2 == 0:
        h = (u - v) // 2
        c = _kappa_poch(Fraction(u + v, 2) - k + 1, h) * (v - k + 1) / (2 ** (u - v) * factorial(h))
        return c * e_coeff(v - k + 1, Fraction(u - v + 1, 2), Fraction(u - v + 1, 2))
    linear = ParamRat(v - k + 1) if printed else ParamRat.affine(1, 1, v - k)
    c = _kappa_poch(Fraction(u + v + 3, 2) - k, (u - v - 1) // 2) * linear
    c = c / (2 ** (u - v + 1) * factorial((u - v + 1) // 2))
    return c * e_coeff(v - k, Fraction(u - v, 2) + 1, Fraction(u - v, 2) + 1)


# ---------------------------------------------------------------------------
# exact oracle from the defining relations
# ---------------------------------------------------------------------------


def check_nonsingular(g, k0, k1):
    s = as_group(g).s
    k0, k1 = as_fraction(k0), as_fraction(k1)
    for k in (k0, k1):
        x = -k - HALF
        if x.denominator == 1 and x >= 0:
            raise SingularParameterError(f"parameter {k} lies in -1/2 - N0")
    y = s * (k0 + k1)
    if y.denominator == 1 and y < 0:
        raise SingularParameterError(f"s*(k0 + k1) = {y} is a negative integer")


def solve_exact(rows: list, rhs: list) -> list:
    """Solve an overdetermined consistent system over Q by Gauss-Jordan elimination."""
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    row = 0
    for col in range(ncols):
        p = next((i for i in range(row, len(m)) if m[i][col] != 0), None)
        if p is None:
            continue
        m[row], m[p] = m[p], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for i in range(len(m)):
            if i != row and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
    for i in range(row, len(m)):
        if m[i][-1] != 0:
            raise InconsistentSystemError("defining relations are inconsistent")
    if len(pivots) < ncols:
        raise InconsistentSystemError("defining relations do not determine V")
    sol = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        sol[col] = m[i][-1]
    return sol


class _Oracle:
    def __init__(self, s: int, k0: Fraction, k1: Fraction):
        self.s, self.k0, self.k1 = s, k0, k1
        self.cache = {(0, 0): {(0, 0): Fraction(1)}}
        self.matrices = {}

    def _matrix(self, n: int):
        if n not in self.matrices:
            rows = []
            for rule in (t_rule, tbar_rule):
                cols = [apply_rule_numeric(rule, {(n - j, j): 1}, self.s, self.k0, self.k1) for j in range(n + 1)]
                for i in range(n):
                    rows.append([col.get((n - 1 - i, i), Fraction(0)) for col in cols])
            self.matrices[n] = rows
        return self.matrices[n]

    def mono(self, a: int, b: int) -> dict:
        if (a, b) in self.cache:
            return self.cache[(a, b)]
        n = a + b
        rhs = []
        for shifted, mult in (((a - 1, b), a), ((a, b - 1), b)):
            img = self.mono(*shifted) if mult else {}
            rhs.extend(mult * img.get((n - 1 - i, i), 0) for i in range(n))
        sol = solve_exact(self._matrix(n), rhs)
        out = {(n - j, j): c for j, c in enumerate(sol) if c}
        self.cache[(a, b)] = out
        return out


@lru_cache(maxsize=64)
def _oracle(s: int, k0: Fraction, k1: Fraction) -> _Oracle:
    return _Oracle(s, k0, k1)


def oracle_v(g, f: MultiPoly, k0, k1) -> MultiPoly:
    """V f at (k0, k1) from the defining relations; coefficients are rational."""
    s = as_group(g).s
    check_nonsingular(s, k0, k1)
    k0, k1 = as_fraction(k0), as_fraction(k1)
    orc = _oracle(s, k0, k1)
    out: dict = {}
    for (a, b), c in f.terms.items():
        c = c.specialize(k0, k1)
        for e, x in orc.mono(a, b).items():
            out[e] = out.get(e, 0) + c * x
    return MultiPoly(out, 2)


__all__ = [
    "InconsistentSystemError",
    "MonomialCase",
    "SingularParameterError",
    "VTerm",
    "check_nonsingular",
    "intertwine_antisym",
    "intertwine_mono",
    "intertwine_poly",
    "intertwine_sym",
    "oracle_v",
    "solve_exact",
    "theorem_coeff_first",
    "theorem_coeff_second",
    "v_terms",
]
