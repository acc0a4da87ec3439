"""Print V on a few monomials and check it against the exact linear-system oracle."""

from fractions import Fraction

from dunkl_dihedral.intertwine import intertwine_mono, oracle_v
from dunkl_dihedral.multipoly import MultiPoly

K = (Fraction(3, 7), Fraction(5, 11))

for s in (2, 3):
    print(f"s = {s}")
    for a, b in [(2, 0), (1, 1), (3, 1)]:
        v = intertwine_mono(s, a, b)
        print(f"  V(z^{a} zb^{b}) = {v}")
        exact = oracle_v(s, MultiPoly.monomial(a, b), *K).specialize(0, 0)
        print(f"    at k = {K[0]}, {K[1]}: matches oracle = {v.specialize(*K) == exact}")
