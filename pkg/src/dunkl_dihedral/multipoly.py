"""Sparse polynomials in z, zbar (and w, wbar) over Q(k0, k1)."""

from __future__ import annotations

from typing import Callable, Mapping

from .field import ParamRat

VAR_NAMES = {2: ("z", "zb"), 4: ("z", "zb", "w", "wb")}
LATEX_NAMES = {2: ("z", "\\bar z"), 4: ("z", "\\bar z", "w", "\\bar w")}


class MultiPoly:
    """Polynomial with ParamRat coefficients in 2 or 4 variables.

    Exponent tuples are ``(a, b)`` for ``z^a zbar^b``, or ``(a, b, c, d)``
    for ``z^a zbar^b w^c wbar^d``.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, terms: Mapping[tuple, object] | None = None, arity: int = 2):
        if arity not in (2, 4):
            raise ValueError("arity must be 2 or 4")
        self.arity = arity
        clean = {}
        if terms:
            for e, c in terms.items():
                if len(e) != arity or min(e) < 0:
                    raise ValueError(f"bad exponent tuple {e} for arity {arity}")
                c = ParamRat.coerce(c)
                if not c.is_zero():
                    clean[tuple(e)] = c
        self.terms = clean

    # constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, arity: int = 2) -> "MultiPoly":
        return cls({}, arity)

    @classmethod
    def one(cls, arity: int = 2) -> "MultiPoly":
        return cls({(0,) * arity: 1}, arity)

    @classmethod
    def monomial(cls, *exps: int, coeff=1) -> "MultiPoly":
        return cls({tuple(exps): coeff}, len(exps))

    @classmethod
    def constant(cls, c, arity: int = 2) -> "MultiPoly":
        return cls({(0,) * arity: c}, arity)

    # basic queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, *exps: int) -> ParamRat:
        """Coefficient of the given monomial; zero for any negative exponent."""
        if min(exps) < 0:
            return ParamRat.zero()
        return self.terms.get(tuple(exps), ParamRat.zero())

    def degrees(self) -> set:
        """Set of total degrees appearing (z-pair degree for arity 4)."""
        return {e[0] + e[1] for e in self.terms}

    def is_homogeneous(self, n: int | None = None) -> bool:
        d = self.degrees()
        if not d:
            return True
        return len(d) == 1 and (n is None or d == {n})

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    # ring operations ----------------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.arity != other.arity:
            raise ValueError("arity mismatch")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other, self.arity)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                v = out[e] + c
                if v.is_zero():
                    del out[e]
                else:
                    out[e] = v
            else:
                out[e] = c
        return MultiPoly._fast(out, self.arity)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._fast({e: -c for e, c in self.terms.items()}, self.arity)

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other, self.arity)
        return self + (-other)

    def __rsub__(self, other):
        return MultiPoly.constant(other, self.arity) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scalar_mul(other)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = c1 * c2
                if e in out:
                    v = out[e] + v
                out[e] = v
        return MultiPoly._fast({e: c for e, c in out.items() if not c.is_zero()}, self.arity)

    def __rmul__(self, other):
        return self.scalar_mul(other)

    def __pow__(self, k: int):
        out = MultiPoly.one(self.arity)
        for _ in range(k):
            out = out * self
        return out

    def scalar_mul(self, c) -> "MultiPoly":
        c = ParamRat.coerce(c)
        if c.is_zero():
            return MultiPoly.zero(self.arity)
        return MultiPoly._fast({e: v * c for e, v in self.terms.items()}, self.arity)

    def shift(self, *exps: int) -> "MultiPoly":
        """Multiply by the monomial with the given exponents."""
        return MultiPoly._fast(
            {tuple(x + y for x, y in zip(e, exps)): c for e, c in self.terms.items()}, self.arity
        )

    def map_coeffs(self, fn: Callable[[ParamRat], ParamRat]) -> "MultiPoly":
        return MultiPoly({e: fn(c) for e, c in self.terms.items()}, self.arity)

    # structural maps ----------------------------------------------------------

    def conjugate_swap(self) -> "MultiPoly":
        """Interchange z <-> zbar (and w <-> wbar)."""
        if self.arity == 2:
            return MultiPoly._fast({(b, a): c for (a, b), c in self.terms.items()}, 2)
        return MultiPoly._fast({(b, a, d, cc): c for (a, b, cc, d), c in self.terms.items()}, 4)

    def swap_w(self) -> "MultiPoly":
        """Interchange w <-> wbar only (arity 4)."""
        return MultiPoly._fast({(a, b, d, cc): c for (a, b, cc, d), c in self.terms.items()}, 4)

    def swap_zw(self) -> "MultiPoly":
        """Interchange the (z, zbar) pair with the (w, wbar) pair."""
        return MultiPoly._fast({(cc, d, a, b): c for (a, b, cc, d), c in self.terms.items()}, 4)

    def substitute_power(self, s: int) -> "MultiPoly":
        """``z -> z^s``, ``zbar -> zbar^s``."""
        if s < 1:
            raise ValueError("s must be >= 1")
        return MultiPoly._fast({tuple(x * s for x in e): c for e, c in self.terms.items()}, self.arity)

    def in_z(self) -> "MultiPoly":
        """Embed a (z, zbar) polynomial into four variables."""
        return MultiPoly._fast({(a, b, 0, 0): c for (a, b), c in self.terms.items()}, 4)

    def in_w(self) -> "MultiPoly":
        """Embed a (z, zbar) polynomial as a polynomial in (w, wbar)."""
        return MultiPoly._fast({(0, 0, a, b): c for (a, b), c in self.terms.items()}, 4)

    def derivative(self, var: int) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            if e[var]:
                ne = list(e)
                ne[var] -= 1
                out[tuple(ne)] = c * e[var]
        return MultiPoly._fast(out, self.arity)

    # evaluation ---------------------------------------------------------------

    def specialize(self, k0, k1) -> dict:
        """Exact nonzero coefficients at a rational parameter point."""
        out = {e: c.specialize(k0, k1) for e, c in self.terms.items()}
        return {e: c for e, c in out.items() if c}

    def evaluate(self, point, k0: float, k1: float) -> complex:
        """Numeric value with the variables treated as independent complex numbers."""
        total = 0j
        for e, c in self.terms.items():
            v = complex(c.evaluate(k0, k1))
            for x, p in zip(point, e):
                v *= x**p
            total += v
        return total

    # display / serialization ------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_json(self) -> list:
        return [{"exps": list(e), "coeff": c.to_json()} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, doc: list, arity: int | None = None) -> "MultiPoly":
        if arity is None:
            arity = len(doc[0]["exps"]) if doc else 2
        return cls({tuple(t["exps"]): ParamRat.from_json(t["coeff"]) for t in doc}, arity)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"MultiPoly({self})"

    def render(self, latex: bool = False) -> str:
        if not self.terms:
            return "0"
        names = (LATEX_NAMES if latex else VAR_NAMES)[self.arity]
        parts = []
        for e, c in self.sorted_terms():
            mono = []
            for name, p in zip(names, e):
                if p == 1:
                    mono.append(name)
                elif p > 1:
                    mono.append(f"{name}^{{{p}}}" if latex else f"{name}^{p}")
            mono_s = (" " if latex else "*").join(mono)
            if c.is_constant() and mono_s:
                x = c.as_fraction()
                sign = "-" if x < 0 else "+"
                if abs(x) != 1:
                    mono_s = f"{abs(x)} {mono_s}" if latex else f"{abs(x)}*{mono_s}"
                parts.append((sign, mono_s))
                continue
            cs = c.latex() if latex else str(c)
            if mono_s:
                parts.append(("+", f"\\left({cs}\\right) {mono_s}" if latex else f"({cs})*{mono_s}"))
            else:
                parts.append(("+", cs))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    @classmethod
    def _fast(cls, terms: dict, arity: int) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.arity = arity
        obj.terms = terms
        return obj


def Z(arity: int = 2) -> MultiPoly:
    return MultiPoly.monomial(*((1, 0) + (0,) * (arity - 2)))


def ZB(arity: int = 2) -> MultiPoly:
    return MultiPoly.monomial(*((0, 1) + (0,) * (arity - 2)))


def coeff(f: MultiPoly, *exps: int) -> ParamRat:
    return f.coeff(*exps)


def conjugate_swap(f: MultiPoly) -> MultiPoly:
    return f.conjugate_swap()


def poly_add(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    return f + g


def poly_mul(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    return f * g


def scalar_mul(c, f: MultiPoly) -> MultiPoly:
    return f.scalar_mul(c)


def substitute_power(f: MultiPoly, s: int) -> MultiPoly:
    return f.substitute_power(s)


def zzbar_power(j: int, arity: int = 2) -> tuple:
    """Exponent shift for ``(z zbar)^j`` (and ``(z zbar w wbar)^j`` in arity 4)."""
    return (j, j) if arity == 2 else (j, j, j, j)


__all__ = [
    "MultiPoly",
    "Z",
    "ZB",
    "coeff",
    "conjugate_swap",
    "poly_add",
    "poly_mul",
    "scalar_mul",
    "substitute_power",
    "zzbar_power",
]
