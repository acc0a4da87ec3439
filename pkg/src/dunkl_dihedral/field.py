"""Exact coefficient field Q(k0, k1).

Scalars are :class:`fractions.Fraction`.  Polynomials in the two parameters
are :class:`ParamPoly`; rational functions are :class:`ParamRat`, whose
denominators are restricted to products of linear forms ``a*k0 + b*k1 + c``.
That restriction covers every denominator that occurs in the dihedral
formulas and lets reduction avoid a general bivariate gcd.

A reduced ``ParamRat`` is stored canonically as::

    scale * num / prod(L_i ** m_i)

with ``num`` a primitive integer polynomial, ``scale > 0`` and no ``L_i``
dividing ``num``.  Because linear forms are irreducible this representation
is unique, so equality and hashing are structural.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]
Exps = tuple  # (e0, e1)


class PoleError(ZeroDivisionError):
    """A denominator linear form vanishes at the requested point."""


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


# ---------------------------------------------------------------------------
# ParamPoly
# ---------------------------------------------------------------------------


class ParamPoly:
    """Polynomial in (k0, k1) with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exps, Scalar] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if isinstance(c, Fraction) and c.denominator == 1:
                        c = c.numerator
                    clean[(int(e[0]), int(e[1]))] = c
        self.terms = clean

    @classmethod
    def constant(cls, c: Scalar) -> "ParamPoly":
        return cls({(0, 0): as_fraction(c)})

    @classmethod
    def affine(cls, a: Scalar, b: Scalar, c: Scalar) -> "ParamPoly":
        """``a*k0 + b*k1 + c``."""
        return cls({(1, 0): as_fraction(a), (0, 1): as_fraction(b), (0, 0): as_fraction(c)})

    @classmethod
    def coerce(cls, x) -> "ParamPoly":
        if isinstance(x, ParamPoly):
            return x
        if isinstance(x, LinearForm):
            return x.as_poly()
        return cls.constant(x)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self.terms)

    def constant_term(self) -> Fraction:
        return Fraction(self.terms.get((0, 0), 0))

    def total_degree(self) -> int:
        return max((e0 + e1 for e0, e1 in self.terms), default=-1)

    def affine_coeffs(self) -> tuple[Fraction, Fraction, Fraction]:
        """Return (a, b, c) for a polynomial of total degree <= 1."""
        if self.total_degree() > 1:
            raise ValueError(f"not affine: {self}")
        t = self.terms
        return (Fraction(t.get((1, 0), 0)), Fraction(t.get((0, 1), 0)), Fraction(t.get((0, 0), 0)))

    def __eq__(self, other):
        if not isinstance(other, ParamPoly):
            try:
                other = ParamPoly.coerce(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = ParamPoly.coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return ParamPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-ParamPoly.coerce(other))

    def __rsub__(self, other):
        return ParamPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ParamPoly({e: c * other for e, c in self.terms.items()})
        other = ParamPoly.coerce(other)
        return ParamPoly(_mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = ParamPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def evaluate(self, k0, k1):
        total = 0
        for (e0, e1), c in self.terms.items():
            total += c * k0**e0 * k1**e1
        return total

    def __repr__(self):
        return f"ParamPoly({self})"

    def __str__(self):
        return _poly_str(self.terms)


def _mul_terms(x: Mapping, y: Mapping) -> dict:
    out: dict = defaultdict(int)
    for (a0, a1), c in x.items():
        for (b0, b1), d in y.items():
            out[(a0 + b0, a1 + b1)] += c * d
    return {e: c for e, c in out.items() if c}


def _monomial_str(e0: int, e1: int, latex: bool = False) -> str:
    names = ("\\kappa_0", "\\kappa_1") if latex else ("k0", "k1")
    parts = []
    for name, e in zip(names, (e0, e1)):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{{{e}}}" if latex else f"{name}^{e}")
    return ("" if latex else "*").join(parts) if not latex else " ".join(parts)


def _poly_str(terms: Mapping, latex: bool = False) -> str:
    if not terms:
        return "0"
    out = []
    for e in sorted(terms, key=lambda e: (-(e[0] + e[1]), -e[0])):
        c = Fraction(terms[e])
        mono = _monomial_str(*e, latex=latex)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if mono:
            if mag == 1:
                body = mono
            elif latex:
                body = (f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}" if mag.denominator != 1 else str(mag)) + " " + mono
            else:
                body = f"{mag}*{mono}"
        else:
            body = (f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}" if latex and mag.denominator != 1 else str(mag))
        out.append((sign, body))
    s = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s


def _primitive(terms: Mapping) -> tuple[Fraction, dict]:
    """Split ``terms`` as content * primitive integer polynomial (content > 0)."""
    if not terms:
        return Fraction(1), {}
    den = 1
    for c in terms.values():
        if isinstance(c, Fraction):
            den = _lcm(den, c.denominator)
    ints = {e: int(c * den) for e, c in terms.items()} if den != 1 else {e: int(c) for e, c in terms.items()}
    g = 0
    for c in ints.values():
        g = gcd(g, c)
        if g == 1:
            break
    if g != 1:
        ints = {e: c // g for e, c in ints.items()}
    return Fraction(g, den), ints


# ---------------------------------------------------------------------------
# LinearForm
# ---------------------------------------------------------------------------


class LinearForm:
    """Normalized non-constant linear form ``a*k0 + b*k1 + c``.

    ``a`` and ``b`` are coprime integers, the first nonzero of them is
    positive, and ``c`` is rational.  Use :meth:`normalize` to build one
    from arbitrary rational data.
    """

    __slots__ = ("a", "b", "c", "_int")

    def __init__(self, a: int, b: int, c: Scalar):
        c = as_fraction(c)
        if (a, b) == (0, 0):
            raise ValueError("constant forms are not stored as LinearForm")
        if gcd(a, b) != 1 or (a < 0 or (a == 0 and b < 0)):
            raise ValueError(f"LinearForm({a}, {b}, {c}) is not normalized")
        self.a, self.b, self.c = a, b, c
        d = c.denominator
        # integer primitive multiple: d*L = d*a*k0 + d*b*k1 + numerator(c)
        self._int = (d * a, d * b, c.numerator, d)

    @staticmethod
    def normalize(a: Scalar, b: Scalar, c: Scalar) -> tuple[Fraction, "LinearForm | None"]:
        """Write ``a*k0 + b*k1 + c = factor * form``.

        Returns ``(c, None)`` when the input is constant.
        """
        a, b, c = as_fraction(a), as_fraction(b), as_fraction(c)
        if a == 0 and b == 0:
            return c, None
        d = _lcm(a.denominator, b.denominator)
        A, B = int(a * d), int(b * d)
        g = gcd(A, B)
        if A < 0 or (A == 0 and B < 0):
            g = -g
        return Fraction(g, d), LinearForm(A // g, B // g, c * d / g)

    @classmethod
    def of(cls, a: Scalar, b: Scalar, c: Scalar) -> "LinearForm":
        """Normalized form proportional to ``a*k0 + b*k1 + c``."""
        _, form = cls.normalize(a, b, c)
        if form is None:
            raise ValueError("constant input has no LinearForm")
        return form

    def as_poly(self) -> ParamPoly:
        return ParamPoly.affine(self.a, self.b, self.c)

    def evaluate(self, k0, k1):
        return self.a * k0 + self.b * k1 + self.c

    def _key(self):
        return (self.a, self.b, self.c)

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self._key() == other._key()

    def __lt__(self, other):
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"LinearForm({self.a}, {self.b}, {self.c})"

    def __str__(self):
        return _poly_str(self.as_poly().terms)

    def latex(self) -> str:
        return _poly_str(self.as_poly().terms, latex=True)


def _div_linear(terms: Mapping[Exps, int], A: int, B: int, C: int) -> dict | None:
    """Exact quotient of an integer polynomial by ``A*k0 + B*k1 + C``.

    Returns None when the division leaves a remainder.  Synthetic division in
    the leading variable is the same computation as substituting the root of
    the form and testing the univariate remainder for zero.
    """
    if A != 0:
        main, lead, other = 0, A, B
    else:
        main, lead, other = 1, B, A
    rows: dict[int, dict[int, int]] = defaultdict(dict)
    for e, c in terms.items():
        rows[e[main]][e[1 - main]] = c
    if not rows:
        return {}
    top = max(rows)
    # ell(y) = other*y + C in the secondary variable
    ell = {k: v for k, v in ((1, other), (0, C)) if v}
    q: dict[int, dict[int, int]] = {}
    carry: dict[int, int] = {}  # ell * q_i, to subtract from p_i
    for i in range(top, 0, -1):
        rem = dict(rows.get(i, {}))
        for k, v in carry.items():
            rem[k] = rem.get(k, 0) - v
        qi = {}
        for k, v in rem.items():
            if v:
                qq, r = divmod(v, lead)
                if r:
                    return None
                qi[k] = qq
        q[i - 1] = qi
        carry = defaultdict(int)
        for k1, v1 in ell.items():
            for k2, v2 in qi.items():
                carry[k1 + k2] += v1 * v2
    rem0 = dict(rows.get(0, {}))
    for k, v in carry.items():
        rem0[k] = rem0.get(k, 0) - v
    if any(rem0.values()):
        return None
    out = {}
    for i, qi in q.items():
        for k, v in qi.items():
            if v:
                out[(i, k) if main == 0 else (k, i)] = v
    return out


# ---------------------------------------------------------------------------
# ParamRat
# ---------------------------------------------------------------------------

FormLike = Union[LinearForm, ParamPoly, tuple]


def _affine_triple(x) -> tuple[Fraction, Fraction, Fraction]:
    if isinstance(x, LinearForm):
        return Fraction(x.a), Fraction(x.b), x.c
    if isinstance(x, ParamPoly):
        return x.affine_coeffs()
    if isinstance(x, tuple) and len(x) == 3:
        return tuple(as_fraction(v) for v in x)
    return Fraction(0), Fraction(0), as_fraction(x)


class ParamRat:
    """Reduced rational function ``scale * num / prod(form**mult)``."""

    __slots__ = ("num", "den", "scale", "_hash")

    def __init__(self, num=0, den: Iterable | Mapping | None = None, scale: Scalar = 1):
        """Build and reduce.

        ``den`` may be a mapping or iterable of ``(form, mult)`` pairs, where a
        form is a LinearForm, an affine ParamPoly or an ``(a, b, c)`` triple;
        plain forms (not in a pair) count once.
        """
        factor = as_fraction(scale)
        dmap: dict[LinearForm, int] = defaultdict(int)
        if den:
            items = den.items() if isinstance(den, Mapping) else den
            for item in items:
                if isinstance(item, tuple) and len(item) == 2 and isinstance(item[1], int) and not isinstance(item[0], (int, Fraction)):
                    form, mult = item
                else:
                    form, mult = item, 1
                f, lf = LinearForm.normalize(*_affine_triple(form))
                if lf is None:
                    if f == 0:
                        raise PoleError("constant zero denominator")
                    factor /= f**mult
                else:
                    factor /= f**mult
                    dmap[lf] += mult
        content, ints = _primitive(ParamPoly.coerce(num).terms)
        self._set(*_reduce(ints, dict(dmap), factor * content))

    def _set(self, num: dict, den: dict, scale: Fraction):
        if not num:
            self.num, self.den, self.scale = ParamPoly(), (), Fraction(1)
        else:
            if scale < 0:
                num = {e: -c for e, c in num.items()}
                scale = -scale
            self.num = ParamPoly(num)
            self.den = tuple(sorted((f, m) for f, m in den.items() if m))
            self.scale = scale
        self._hash = None

    @classmethod
    def _raw(cls, num: dict, den: dict, scale: Fraction) -> "ParamRat":
        obj = cls.__new__(cls)
        obj._set(*_reduce(num, den, scale))
        return obj

    # constructors -----------------------------------------------------------

    @classmethod
    def zero(cls) -> "ParamRat":
        return cls(0)

    @classmethod
    def one(cls) -> "ParamRat":
        return cls(1)

    @classmethod
    def k0(cls) -> "ParamRat":
        return cls(ParamPoly({(1, 0): 1}))

    @classmethod
    def k1(cls) -> "ParamRat":
        return cls(ParamPoly({(0, 1): 1}))

    @classmethod
    def affine(cls, a: Scalar, b: Scalar, c: Scalar) -> "ParamRat":
        return cls(ParamPoly.affine(a, b, c))

    @classmethod
    def from_factors(cls, const: Scalar = 1, num_forms: Iterable = (), den_forms: Iterable = ()) -> "ParamRat":
        """``const * prod(num_forms) / prod(den_forms)`` for affine factors."""
        num = ParamPoly.constant(const)
        for f in num_forms:
            num = num * ParamPoly.affine(*_affine_triple(f))
        return cls(num, list(den_forms))

    @classmethod
    def coerce(cls, x) -> "ParamRat":
        if isinstance(x, ParamRat):
            return x
        return cls(x)

    # predicates -------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return not self.den and self.num.is_constant()

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.scale * self.num.constant_term()

    def multiplicity(self, form: LinearForm) -> int:
        return dict(self.den).get(form, 0)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, ParamRat):
            try:
                other = ParamRat.coerce(other)
            except TypeError:
                return NotImplemented
        return self.scale == other.scale and self.den == other.den and self.num == other.num

    def equals_cross(self, other: "ParamRat") -> bool:
        """Equality by cross-multiplication, independent of canonical form."""
        other = ParamRat.coerce(other)
        dx, dy = dict(self.den), dict(other.den)
        lhs = ParamPoly(self.num.terms) * self.scale
        rhs = ParamPoly(other.num.terms) * other.scale
        for f, m in dy.items():
            lhs = lhs * f.as_poly() ** m
        for f, m in dx.items():
            rhs = rhs * f.as_poly() ** m
        return lhs == rhs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.scale, self.den, self.num))
        return self._hash

    # arithmetic -------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, ParamRat):
            if isinstance(other, (int, Fraction)):
                other = ParamRat(other)
            else:
                return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        dx, dy = dict(self.den), dict(other.den)
        if dx == dy:
            lhs, rhs, den = self.num.terms, other.num.terms, dx
            ax, ay = self.scale, other.scale
        else:
            den = dict(dx)
            for f, m in dy.items():
                if m > den.get(f, 0):
                    den[f] = m
            lhs, ax = _lift(self.num.terms, self.scale, dx, den)
            rhs, ay = _lift(other.num.terms, other.scale, dy, den)
        # ax*lhs + ay*rhs with integer arithmetic
        q = _lcm(ax.denominator, ay.denominator)
        px, py = ax.numerator * (q // ax.denominator), ay.numerator * (q // ay.denominator)
        out = dict()
        for e, c in lhs.items():
            out[e] = c * px
        for e, c in rhs.items():
            v = out.get(e, 0) + c * py
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        content, ints = _primitive(out)
        return ParamRat._raw(ints, den, content / q)

    __radd__ = __add__

    def __neg__(self):
        obj = ParamRat.__new__(ParamRat)
        obj.num = -self.num
        obj.den = self.den
        obj.scale = self.scale
        obj._hash = None
        return obj

    def __sub__(self, other):
        if not isinstance(other, ParamRat):
            if isinstance(other, (int, Fraction)):
                other = ParamRat(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return ParamRat.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ParamRat.zero()
            obj = ParamRat.__new__(ParamRat)
            other = Fraction(other)
            num = self.num if other > 0 else -self.num
            obj.num, obj.den, obj.scale, obj._hash = num, self.den, self.scale * abs(other), None
            if self.is_zero():
                return self
            return obj
        if not isinstance(other, ParamRat):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ParamRat.zero()
        den = dict(self.den)
        for f, m in other.den:
            den[f] = den.get(f, 0) + m
        num = _mul_terms(self.num.terms, other.num.terms)
        return ParamRat._raw(num, den, self.scale * other.scale)

    __rmul__ = __mul__

    def reciprocal(self) -> "ParamRat":
        """Inverse; the numerator must be constant or a single affine factor."""
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of zero")
        if self.num.total_degree() > 1:
            raise ValueError("reciprocal needs a numerator that is constant or affine")
        num = ParamPoly.constant(1)
        for f, m in self.den:
            num = num * f.as_poly() ** m
        return ParamRat(num, [self.num], 1 / self.scale)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError
            return self * (1 / Fraction(other))
        return self * ParamRat.coerce(other).reciprocal()

    def __rtruediv__(self, other):
        return ParamRat.coerce(other) * self.reciprocal()

    def __pow__(self, k: int):
        out = ParamRat.one()
        for _ in range(k):
            out = out * self
        return out

    # evaluation -------------------------------------------------------------

    def specialize(self, k0, k1) -> Fraction:
        k0, k1 = as_fraction(k0), as_fraction(k1)
        d = Fraction(1)
        for f, m in self.den:
            v = f.evaluate(k0, k1)
            if v == 0:
                raise PoleError(f"{f} vanishes at ({k0}, {k1})")
            d *= v**m
        return self.scale * Fraction(self.num.evaluate(k0, k1)) / d

    def evaluate(self, k0, k1):
        """Floating-point (or complex) evaluation."""
        d = 1.0
        for f, m in self.den:
            d *= float(f.a) * k0 + float(f.b) * k1 + float(f.c)
        num = 0.0
        for (e0, e1), c in self.num.terms.items():
            num += float(c) * k0**e0 * k1**e1
        return float(self.scale) * num / d

    def substitute(self, m0: tuple, m1: tuple) -> "ParamRat":
        """Affine change of variables ``k0 -> m0``, ``k1 -> m1``.

        Each map is a triple ``(p, q, r)`` meaning ``p*k0 + q*k1 + r`` in the
        new variables.
        """
        if self.is_zero():
            return self
        x0 = ParamPoly.affine(*m0)
        x1 = ParamPoly.affine(*m1)
        p0, p1 = [ParamPoly.constant(1)], [ParamPoly.constant(1)]
        num = ParamPoly()
        for (e0, e1), c in self.num.terms.items():
            while len(p0) <= e0:
                p0.append(p0[-1] * x0)
            while len(p1) <= e1:
                p1.append(p1[-1] * x1)
            num = num + p0[e0] * p1[e1] * c
        den = []
        for f, m in self.den:
            image = x0 * f.a + x1 * f.b + f.c
            a, b, c = image.affine_coeffs()
            if a == 0 and b == 0 and c == 0:
                raise PoleError(f"{f} vanishes identically under the substitution")
            den.append((image, m))
        return ParamRat(num, den, self.scale)

    # display / serialization -----------------------------------------------

    def __repr__(self):
        return f"ParamRat({self})"

    def __str__(self):
        return self._render(latex=False)

    def latex(self) -> str:
        return self._render(latex=True)

    def _render(self, latex: bool) -> str:
        if self.is_zero():
            return "0"
        # display denominators as primitive integer forms
        scale = self.scale
        for f, m in self.den:
            scale *= f._int[3] ** m
        num = ParamPoly(self.num.terms) * scale.numerator
        dscale = scale.denominator
        nstr = _poly_str(num.terms, latex=latex)
        if not self.den and dscale == 1:
            return nstr
        factors = [] if dscale == 1 else [str(dscale)]
        for f, m in self.den:
            A, B, C, _ = f._int
            fs = f"({_poly_str(ParamPoly.affine(A, B, C).terms, latex=latex)})"
            if m > 1:
                fs += f"^{{{m}}}" if latex else f"^{m}"
            factors.append(fs)
        if latex:
            return f"\\frac{{{nstr}}}{{{' '.join(factors)}}}"
        if len(num.terms) > 1:
            nstr = f"({nstr})"
        return f"{nstr}/" + (factors[0] if len(factors) == 1 else "(" + "*".join(factors) + ")")

    def to_json(self) -> dict:
        return {
            "num": [
                {"e0": e0, "e1": e1, "c": _frac_str(c)}
                for (e0, e1), c in sorted(self.num.terms.items())
            ],
            "den": [
                {"a": f.a, "b": f.b, "c": _frac_str(f.c), "mult": m} for f, m in self.den
            ],
            "scale": _frac_str(self.scale),
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "ParamRat":
        num = ParamPoly({(int(t["e0"]), int(t["e1"])): Fraction(t["c"]) for t in doc["num"]})
        den = [(LinearForm(int(d["a"]), int(d["b"]), Fraction(d["c"])), int(d["mult"])) for d in doc["den"]]
        return cls(num, den, Fraction(doc["scale"]))


def _frac_str(c) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def _lift(num: Mapping, scale: Fraction, den: Mapping, target: Mapping) -> tuple[dict, Fraction]:
    """Rewrite ``scale*num/den`` over the larger denominator ``target``."""
    out = dict(num)
    for f, m in target.items():
        extra = m - den.get(f, 0)
        if extra:
            A, B, C, d = f._int
            lin = {k: v for k, v in (((1, 0), A), ((0, 1), B), ((0, 0), C)) if v}
            for _ in range(extra):
                out = _mul_terms(out, lin)
            scale = scale / d**extra
    return out, scale


def _reduce(num: dict, den: dict, scale: Fraction) -> tuple[dict, dict, Fraction]:
    if not num:
        return {}, {}, Fraction(1)
    for f in list(den):
        m = den[f]
        A, B, C, d = f._int
        while m:
            q = _div_linear(num, A, B, C)
            if q is None:
                break
            num, m = q, m - 1
            scale *= d
        den[f] = m
    return num, {f: m for f, m in den.items() if m}, scale


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------


def rat_add(x: ParamRat, y: ParamRat) -> ParamRat:
    return ParamRat.coerce(x) + ParamRat.coerce(y)


def rat_mul(x: ParamRat, y: ParamRat) -> ParamRat:
    return ParamRat.coerce(x) * ParamRat.coerce(y)


def reduce(num, den: Iterable) -> ParamRat:
    """Cancel every denominator form that divides ``num``."""
    return ParamRat(num, den)


def specialize(x: ParamRat, k0, k1) -> Fraction:
    return ParamRat.coerce(x).specialize(k0, k1)


def pochhammer(base, n: int) -> ParamPoly:
    """Rising factorial ``base (base+1) ... (base+n-1)`` as a polynomial."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    base = ParamPoly.coerce(base)
    out = ParamPoly.constant(1)
    for i in range(n):
        out = out * (base + i)
        if out.is_zero():
            break
    return out


def poch_forms(base, n: int) -> list:
    """Affine factors ``base + i`` for ``0 <= i < n``, as triples."""
    a, b, c = _affine_triple(base)
    return [(a, b, c + i) for i in range(n)]


def poch_rat(base, n: int, inverse: bool = False) -> ParamRat:
    """``(base)_n`` (or its reciprocal) as a ParamRat."""
    forms = poch_forms(base, n)
    if inverse:
        return ParamRat.from_factors(1, (), forms)
    return ParamRat.from_factors(1, forms, ())


K0 = ParamPoly({(1, 0): 1})
K1 = ParamPoly({(0, 1): 1})
