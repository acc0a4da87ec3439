"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from dunkl_dihedral.field import ParamPoly, ParamRat
from dunkl_dihedral.multipoly import MultiPoly

small = st.integers(-4, 4)
fractions = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))
points = st.tuples(
    st.builds(Fraction, st.integers(-50, 50), st.integers(1, 17)),
    st.builds(Fraction, st.integers(-50, 50), st.integers(1, 17)),
)

forms = st.tuples(small, small, fractions).filter(lambda f: f[:2] != (0, 0))

polys = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), fractions, max_size=4).map(ParamPoly)

rats = st.builds(
    lambda num, den, c: ParamRat(num, den, c),
    polys,
    st.lists(forms, max_size=3),
    fractions.filter(bool),
)

# coefficients are kept small so the polynomial tests stay fast
simple_rats = st.builds(
    lambda c, f: ParamRat.from_factors(c, (), f),
    fractions,
    st.lists(forms, max_size=1),
)


def multipolys(arity=2, max_exp=3):
    keys = st.tuples(*[st.integers(0, max_exp)] * arity)
    return st.dictionaries(keys, simple_rats, max_size=4).map(lambda t: MultiPoly(t, arity))


def homogeneous(n, coeffs=simple_rats):
    return st.dictionaries(st.integers(0, n), coeffs, max_size=3).map(
        lambda t: MultiPoly({(n - b, b): c for b, c in t.items()})
    )
