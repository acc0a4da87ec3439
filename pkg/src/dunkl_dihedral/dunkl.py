"""Dunkl operators T, Tbar for the dihedral group I2(2s).

The symbolic operators act on monomials by closed formulas; the
reflection-sum definition is implemented in floating point only, as an
independent check on those formulas.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache

from .field import LinearForm, ParamRat
from .multipoly import MultiPoly


class MirrorProximityError(ValueError):
    """The evaluation point lies too close to a reflecting line."""


@dataclass(frozen=True)
class GroupParam:
    """The group I2(2s), s >= 1."""

    s: int

    def __post_init__(self):
        if not isinstance(self.s, int) or self.s < 1:
            raise ValueError(f"s must be a positive integer, got {self.s!r}")

    @property
    def gamma0(self) -> LinearForm:
        """``s*k0 + s*k1 + 1`` (stored normalized as k0 + k1 + 1/s)."""
        return LinearForm.of(self.s, self.s, 1)

    @property
    def gamma0_affine(self) -> tuple:
        return (self.s, self.s, 1)

    @property
    def gamma0_rat(self) -> ParamRat:
        return ParamRat.affine(self.s, self.s, 1)


def as_group(g) -> GroupParam:
    return g if isinstance(g, GroupParam) else GroupParam(int(g))


# A rule is a list of (exps, (const, c0, c1)) meaning coefficient const + c0*k0 + c1*k1.


def _tz(a: int, b: int, s: int) -> list:
    # T z^a zbar^b for a >= b
    out = []
    if a:
        out.append(((a - 1, b), (a, 0, 0)))
    for j in range((a - b - 1) // s + 1):
        out.append(((a - 1 - j * s, b + j * s), (0, s, s * (-1) ** j)))
    return out


def _tzb(a: int, b: int, s: int) -> list:
    # Tbar z^a zbar^b for a >= b
    out = []
    if b:
        out.append(((a, b - 1), (b, 0, 0)))
    for j in range(1, (a - b) // s + 1):
        out.append(((a - j * s, b - 1 + j * s), (0, -s, -s * (-1) ** j)))
    return out


def _swap(rule: list) -> list:
    return [((q, p), c) for (p, q), c in rule]


@lru_cache(maxsize=None)
def t_rule(a: int, b: int, s: int) -> tuple:
    """Action of T on ``z^a zbar^b``; a < b uses the z <-> zbar interchange."""
    rule = _tz(a, b, s) if a >= b else _swap(_tzb(b, a, s))
    return tuple(_merge(rule))


@lru_cache(maxsize=None)
def tbar_rule(a: int, b: int, s: int) -> tuple:
    rule = _tzb(a, b, s) if a >= b else _swap(_tz(b, a, s))
    return tuple(_merge(rule))


def _merge(rule: list) -> list:
    acc: dict = {}
    for e, (c, c0, c1) in rule:
        x = acc.get(e, (0, 0, 0))
        acc[e] = (x[0] + c, x[1] + c0, x[2] + c1)
    return [(e, v) for e, v in sorted(acc.items()) if any(v)]


@lru_cache(maxsize=None)
def _rule_coeff(c: int, c0: int, c1: int) -> ParamRat:
    return ParamRat.affine(c0, c1, c)


def _apply(rule_fn, f: MultiPoly, s: int) -> MultiPoly:
    if f.arity != 2:
        raise ValueError("Dunkl operators act on (z, zbar) polynomials")
    out: dict = {}
    for (a, b), c in f.terms.items():
        for e, v in rule_fn(a, b, s):
            term = c * _rule_coeff(*v)
            out[e] = out[e] + term if e in out else term
    return MultiPoly({e: c for e, c in out.items() if not c.is_zero()}, 2)


def apply_T(f: MultiPoly, g) -> MultiPoly:
    return _apply(t_rule, f, as_group(g).s)


def apply_Tbar(f: MultiPoly, g) -> MultiPoly:
    return _apply(tbar_rule, f, as_group(g).s)


def laplacian(f: MultiPoly, g) -> MultiPoly:
    """The Dunkl Laplacian ``4 T Tbar``."""
    return apply_T(apply_Tbar(f, g), g) * 4


def is_harmonic(f: MultiPoly, g) -> bool:
    return apply_T(apply_Tbar(f, g), g).is_zero()


# ---------------------------------------------------------------------------
# specialized (exact rational) action, used by the linear-system oracle
# ---------------------------------------------------------------------------


def apply_rule_numeric(rule_fn, f: dict, s: int, k0, k1) -> dict:
    """Apply T (``t_rule``) or Tbar (``tbar_rule``) to a dict of numeric coefficients."""
    out: dict = {}
    for (a, b), c in f.items():
        for e, (v, v0, v1) in rule_fn(a, b, s):
            out[e] = out.get(e, 0) + c * (v + v0 * k0 + v1 * k1)
    return {e: c for e, c in out.items() if c}


# ---------------------------------------------------------------------------
# floating-point oracle from the reflection-sum definition
# ---------------------------------------------------------------------------

MIRROR_TOL = 1e-6


def _reflection_sums(f: MultiPoly, s: int, z0: complex, k0: float, k1: float):
    zb0 = z0.conjugate()
    omega = cmath.exp(1j * cmath.pi / s)
    fz = f.evaluate((z0, zb0), k0, k1)
    parts = []
    for m in range(2 * s):
        wm = omega**m
        den = z0 - zb0 * wm
        if abs(den) < MIRROR_TOL:
            raise MirrorProximityError(f"|z - zbar w^{m}| = {abs(den):.3g} at z = {z0}")
        # f(zbar w^m) abbreviates f(zbar w^m, z w^-m)
        fr = f.evaluate((zb0 * wm, z0 / wm), k0, k1)
        kappa = k0 if m % 2 == 0 else k1
        parts.append((kappa, (fz - fr) / den, wm))
    return parts


def definitional_eval_T(f: MultiPoly, g, z0: complex, k0: float, k1: float) -> complex:
    """Evaluate ``T f`` at ``z0`` from the divided-difference definition."""
    s = as_group(g).s
    total = f.derivative(0).evaluate((z0, z0.conjugate()), k0, k1)
    for kappa, q, _ in _reflection_sums(f, s, z0, k0, k1):
        total += kappa * q
    return total


def definitional_eval_Tbar(f: MultiPoly, g, z0: complex, k0: float, k1: float) -> complex:
    s = as_group(g).s
    total = f.derivative(1).evaluate((z0, z0.conjugate()), k0, k1)
    for kappa, q, wm in _reflection_sums(f, s, z0, k0, k1):
        total -= kappa * q * wm
    return total
