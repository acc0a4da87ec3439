"""Behaviour on the lines k0 + k1 = -m, m = 1, 2, ...

Identities that are polynomial in k0 after the restriction are checked by
direct substitution k1 = -m - k0.  Series whose individual terms blow up
(K_n and V) are rebuilt with k1 = -m + eps - k0 and grouped in pairs; each
group must then be free of eps in its denominators.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .dunkl import as_group
from .field import LinearForm, ParamRat, poch_forms
from .harmonic import f_coeff_form, lambda_const
from .intertwine import MonomialCase, v_terms
from .kernels import poisson_p
from .multipoly import MultiPoly

EPS_FORM = LinearForm(0, 1, 0)
HALF = Fraction(1, 2)


class UnpairedPoleError(ArithmeticError):
    """A grouped expansion still has a pole at eps = 0."""


# ---------------------------------------------------------------------------
# rational functions in (k0, eps)
# ---------------------------------------------------------------------------


class EpsilonRat:
    """A ParamRat whose second variable is eps (after k1 -> -m + eps - k0)."""

    __slots__ = ("rat",)

    def __init__(self, rat: ParamRat):
        self.rat = rat

    @property
    def eps_order(self) -> int:
        """Multiplicity of eps in the reduced denominator."""
        return self.rat.multiplicity(EPS_FORM)

    @property
    def is_finite(self) -> bool:
        return self.eps_order == 0

    def at_zero(self) -> ParamRat:
        """Value at eps = 0, a rational function of k0 alone."""
        if not self.is_finite:
            raise UnpairedPoleError(f"pole of order {self.eps_order} at eps = 0 in {self}")
        return self.rat.substitute((1, 0, 0), (0, 0, 0))

    def __add__(self, other: "EpsilonRat") -> "EpsilonRat":
        return EpsilonRat(self.rat + other.rat)

    def __mul__(self, other) -> "EpsilonRat":
        other = other.rat if isinstance(other, EpsilonRat) else other
        return EpsilonRat(self.rat * other)

    def __eq__(self, other):
        return isinstance(other, EpsilonRat) and self.rat == other.rat

    def __hash__(self):
        return hash(self.rat)

    def __str__(self):
        return str(self.rat).replace("k1", "eps")

    def __repr__(self):
        return f"EpsilonRat({self})"


def epsilon_substitute(x: ParamRat, m: int) -> EpsilonRat:
    return EpsilonRat(ParamRat.coerce(x).substitute((1, 0, 0), (-1, 1, -m)))


def restrict(x: ParamRat, m: int) -> ParamRat:
    """Direct substitution k1 = -m - k0."""
    return ParamRat.coerce(x).substitute((1, 0, 0), (-1, 0, -m))


def restrict_poly(f: MultiPoly, m: int) -> MultiPoly:
    return f.map_coeffs(lambda c: restrict(c, m))


def epsilon_poly(f: MultiPoly, m: int) -> dict:
    return {e: epsilon_substitute(c, m) for e, c in f.terms.items()}


def max_eps_order(coeffs: dict) -> int:
    return max((c.eps_order for c in coeffs.values()), default=0)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


@dataclass
class VerificationReport:
    identity: str
    params: dict
    status: str = "pass"
    witness: dict | None = None
    checked: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def record(self, name: str, ok: bool, witness: dict | None = None):
        self.checked.append(name)
        if not ok and self.status == "pass":
            self.status = "fail"
            self.witness = {"identity": name, **(witness or {})}

    def to_json(self) -> dict:
        return {"identity": self.identity, "params": self.params, "status": self.status, "witness": self.witness}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _poly_witness(diff: MultiPoly) -> dict:
    if diff.is_zero():
        return {}
    e, c = diff.sorted_terms()[0]
    return {"exps": list(e), "difference": str(c)}


def _check_poly(report: VerificationReport, name: str, lhs: MultiPoly, rhs: MultiPoly):
    diff = lhs - rhs
    report.record(name, diff.is_zero(), _poly_witness(diff))


def _check_rat(report: VerificationReport, name: str, lhs: ParamRat, rhs: ParamRat):
    report.record(name, lhs == rhs, {"lhs": str(lhs), "rhs": str(rhs)})


# ---------------------------------------------------------------------------
# polynomial identities at k0 + k1 = -m
# ---------------------------------------------------------------------------


def _ratio(m: int, top: tuple, bottom: tuple, fact_num: int, fact_den: int) -> ParamRat:
    """(k0+1/2)_{top} fact_num! / ((k0+1/2)_{bottom} fact_den!)."""
    base = (1, 0, HALF)
    return ParamRat.from_factors(
        Fraction(factorial(fact_num), factorial(fact_den)), poch_forms(base, top), poch_forms(base, bottom)
    )


def _scaled_collapse(report, name, m, lhs: MultiPoly, power: int, rhs: MultiPoly, c: ParamRat):
    # lhs = c (z zbar)^power rhs, with negative powers moved to the left
    lhs, rhs = restrict_poly(lhs, m), restrict_poly(rhs.scalar_mul(c), m)
    if power >= 0:
        rhs = rhs.shift(power, power)
    else:
        lhs = lhs.shift(-power, -power)
    _check_poly(report, name, lhs, rhs)


def check_basis_collapse(m: int, n: int) -> VerificationReport:
    """Harmonic polynomials of degree 2n (and 2n+1) against those of degree 2m-2n (2m-2n-1)."""
    report = VerificationReport("basis_collapse", {"m": m, "n": n})
    if 0 <= n <= m:
        c = _ratio(m, n, m - n, m - n, n)
        _scaled_collapse(report, "f0_even", m, f_coeff_form(2 * n, "f0"), 2 * n - m, f_coeff_form(2 * m - 2 * n, "f0"), c)
    if 1 <= n <= m - 1:
        c = _ratio(m, n, m - n, m - n - 1, n - 1)
        _scaled_collapse(report, "f1_even", m, f_coeff_form(2 * n, "f1"), 2 * n - m, f_coeff_form(2 * m - 2 * n, "f1"), c)
    if 0 <= n < m:
        c = _ratio(m, n + 1, m - n, m - n - 1, n)
        _scaled_collapse(
            report, "f0_odd", m, f_coeff_form(2 * n + 1, "f0"), 2 * n - m + 1, f_coeff_form(2 * m - 2 * n - 1, "f0"), c
        )
        c = _ratio(m, n, m - n - 1, m - n - 1, n)
        _scaled_collapse(
            report, "f1_odd", m, f_coeff_form(2 * n + 1, "f1"), 2 * n - m + 1, f_coeff_form(2 * m - 2 * n - 1, "f1"), c
        )
        c = _ratio(m, n, m - n, m - n - 1, n)
        rhs = f_coeff_form(2 * m - 2 * n - 1).conjugate_swap().shift(0, 1)
        _scaled_collapse(report, "f_even_to_odd", m, f_coeff_form(2 * n), 2 * n - m, rhs, c)
    return report


def check_lambda_ratios(m: int, n: int) -> VerificationReport:
    report = VerificationReport("lambda_ratios", {"m": m, "n": n})

    def lam(k, variant="f"):
        return restrict(lambda_const(k, variant), m)

    def neg_square(c):
        return restrict(c * c * -1, m)

    if 1 <= n <= m - 1 and 2 * n != m:
        _check_rat(report, "even_f0", lam(2 * m - 2 * n, "f0"), neg_square(_ratio(m, n, m - n, m - n, n)) * lam(2 * n, "f0"))
        _check_rat(
            report, "even_f1", lam(2 * m - 2 * n, "f1"), neg_square(_ratio(m, n, m - n, m - n - 1, n - 1)) * lam(2 * n, "f1")
        )
    if n == 0:
        _check_rat(report, "top_f0", lam(2 * m, "f0"), neg_square(_ratio(m, 0, m, m, 0)))
        _check_rat(report, "top_f1", lam(2 * m, "f1"), ParamRat.zero())
        _check_rat(report, "middle_f0", lam(m, "f0"), ParamRat.zero())
        _check_rat(report, "middle_f1", lam(m, "f1"), ParamRat.zero())
    if 0 <= n <= m - 1 and 2 * n + 1 != m:
        _check_rat(
            report, "odd_f0", lam(2 * m - 2 * n - 1, "f0"), neg_square(_ratio(m, n + 1, m - n, m - n - 1, n)) * lam(2 * n + 1, "f0")
        )
        _check_rat(
            report, "odd_f1", lam(2 * m - 2 * n - 1, "f1"), neg_square(_ratio(m, n, m - n - 1, m - n - 1, n)) * lam(2 * n + 1, "f1")
        )
    if 0 <= n <= m - 1:
        _check_rat(report, "full", lam(2 * m - 2 * n - 1), neg_square(_ratio(m, n, m - n, m - n - 1, n)) * lam(2 * n))
    if n > 2 * m:
        _check_rat(report, "vanish_f0", lam(n, "f0"), ParamRat.zero())
        _check_rat(report, "vanish_f1", lam(n, "f1"), ParamRat.zero())
    if n >= 2 * m:
        _check_rat(report, "vanish_full", lam(n), ParamRat.zero())
    return report


def check_pzero(g, m: int, N: int) -> VerificationReport:
    """P_N = 0 past 2sm; otherwise P_N + (z zbar w wbar)^{N - sm} P_{2sm-N} = 0."""
    s = as_group(g).s
    report = VerificationReport("poisson_vanishing", {"s": s, "m": m, "N": N})
    p = restrict_poly(poisson_p(s, N), m)
    if N > 2 * s * m:
        _check_poly(report, "vanish", p, MultiPoly.zero(4))
        return report
    partner = restrict_poly(poisson_p(s, 2 * s * m - N), m)
    shift = N - s * m
    if shift >= 0:
        lhs = p + partner.shift(shift, shift, shift, shift)
    else:
        lhs = p.shift(-shift, -shift, -shift, -shift) + partner
    _check_poly(report, "reflect", lhs, MultiPoly.zero(4))
    return report


# ---------------------------------------------------------------------------
# removable singularities of K_n and V
# ---------------------------------------------------------------------------


def kernel_pairing(g, m: int, n: int) -> list:
    """Groups of j-indices of the K_n series: singletons and pairs j0 + j1 = n - sm."""
    s = as_group(g).s
    groups, seen = [], set()
    for j in range(n // 2 + 1):
        if j in seen:
            continue
        if n - j >= s * m and n - 2 * j <= 2 * s * m:
            partner = n - j - s * m
            group = (j,) if partner == j else tuple(sorted((j, partner)))
        else:
            group = (j,)
        seen.update(group)
        groups.append(group)
    return groups


def _kernel_term(s: int, n: int, j: int) -> MultiPoly:
    c = ParamRat.from_factors(Fraction(1, factorial(j) * 2**n), (), poch_forms((s, s, 1), n - j))
    return poisson_p(s, n - 2 * j).shift(j, j, j, j).scalar_mul(c)


def _add_coeffs(total: dict, part: dict):
    for e, c in part.items():
        total[e] = total[e] + c if e in total else c


def check_k_removable(g, m: int, n: int) -> VerificationReport:
    """Group the K_n series in pairs and require every group to be finite at eps = 0."""
    s = as_group(g).s
    report = VerificationReport("kernel_removable", {"s": s, "m": m, "n": n})
    total: dict = {}
    singular_terms = []
    for group in kernel_pairing(s, m, n):
        poly = MultiPoly.zero(4)
        for j in group:
            term = _kernel_term(s, n, j)
            if len(group) == 2 and max_eps_order(epsilon_poly(term, m)) > 0:
                singular_terms.append(j)
            poly = poly + term
        coeffs = epsilon_poly(poly, m)
        if max_eps_order(coeffs) > 0:
            raise UnpairedPoleError(f"group {group} of K_{n} keeps a pole at k0 + k1 = -{m} (s = {s})")
        _add_coeffs(total, coeffs)
    for c in total.values():
        c.at_zero()
    report.params["singular_terms"] = sorted(singular_terms)
    report.record("finite_at_zero", True)
    return report


def ungrouped_kernel_orders(g, m: int, n: int) -> dict:
    """eps-order of each individual K_n term (the ungrouped negative control)."""
    s = as_group(g).s
    return {j: max_eps_order(epsilon_poly(_kernel_term(s, n, j), m)) for j in range(n // 2 + 1)}


def v_pairing(g, a: int, b: int, m: int) -> list:
    """Index pairs (k, k') of the V-expansion whose poles cancel at k0 + k1 = -m."""
    case = MonomialCase.of(g, a, b)
    u, v, r, t, s = case.u, case.v, case.r, case.t, case.s
    if case.kind == "congruent":
        total = u + v - m
        return [(k, total - k) for k in range(v + 1) if k < total - k <= v]
    total = u + v + 1 - m
    low = 1 - (r + t) // s
    return [(k, total - k) for k in range(v + 1) if low <= total - k <= v]


def v_groups(g, a: int, b: int, m: int) -> list:
    """Summands of V(z^a zbar^b) collected into the groups given by ``v_pairing``."""
    case = MonomialCase.of(g, a, b)
    part = "sym" if a == b else "mono"
    terms = {t.label: t for t in v_terms(g, a, b, part)}
    pairs = v_pairing(g, a, b, m)
    if case.kind == "congruent":
        labelled = [((0, k), (0, k2)) for k, k2 in pairs]
    else:
        labelled = [((1, k), (2, k2)) for k, k2 in pairs]
    groups, used = [], set()
    for pair in labelled:
        members = [terms[x] for x in pair if x in terms]
        used.update(pair)
        if members:
            groups.append(members)
    groups.extend([t] for label, t in sorted(terms.items()) if label not in used)
    return groups


def check_v_removable(g, a: int, b: int, m: int) -> VerificationReport:
    s = as_group(g).s
    if a < b:
        a, b = b, a
    report = VerificationReport("intertwiner_removable", {"s": s, "m": m, "a": a, "b": b})
    singular_terms = []
    for group in v_groups(s, a, b, m):
        poly = MultiPoly.zero()
        for term in group:
            expanded = term.expand()
            if len(group) == 2 and max_eps_order(epsilon_poly(expanded, m)) > 0:
                singular_terms.append(term.label)
            poly = poly + expanded
        coeffs = epsilon_poly(poly, m)
        if max_eps_order(coeffs) > 0:
            labels = [t.label for t in group]
            raise UnpairedPoleError(f"group {labels} of V(z^{a} zbar^{b}) keeps a pole at k0 + k1 = -{m} (s = {s})")
        for c in coeffs.values():
            c.at_zero()
    report.params["singular_terms"] = [list(x) for x in sorted(singular_terms)]
    report.record("finite_at_zero", True)
    return report


__all__ = [
    "EpsilonRat",
    "UnpairedPoleError",
    "VerificationReport",
    "check_basis_collapse",
    "check_k_removable",
    "check_lambda_ratios",
    "check_pzero",
    "check_v_removable",
    "epsilon_substitute",
    "kernel_pairing",
    "restrict",
    "ungrouped_kernel_orders",
    "v_groups",
    "v_pairing",
]
