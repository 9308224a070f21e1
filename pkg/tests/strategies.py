"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from dads.monomials import ball
from dads.polysys import Polynomial
from dads.scalars import GF
from dads.series import TruncatedSeries


def polynomials(field: GF, r: int, max_degree: int = 3, max_terms: int = 5):
    pts = ball(r, max_degree)
    terms = st.dictionaries(st.sampled_from(pts), st.integers(0, field.p - 1), max_size=max_terms)
    return terms.map(lambda t: Polynomial(field, r, t))


def series(field: GF, r: int, bound: int):
    n = len(ball(r, bound))
    vals = st.lists(st.integers(0, field.p - 1), min_size=n, max_size=n)
    return vals.map(lambda v: TruncatedSeries(field, r, bound, v))
