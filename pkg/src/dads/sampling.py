"""Seeded random polynomials, matrices and series for the law suites."""

from __future__ import annotations

import numpy as np

from .monomials import ball, count_leq
from .polysys import PolyMatrix, Polynomial, PolyVector
from .series import SeriesVector, TruncatedSeries


def random_poly(rng: np.random.Generator, field, r: int, max_degree: int,
                max_terms: int | None = None) -> Polynomial:
    """Sparse polynomial with degree <= max_degree and random support."""
    pts = ball(r, max_degree)
    if max_terms is None:
        max_terms = min(len(pts), 6)
    nterms = int(rng.integers(0, max_terms + 1))
    idx = rng.choice(len(pts), size=nterms, replace=False)
    p = field.p if hasattr(field, "p") else int(field)
    return Polynomial(field, r, {pts[int(i)]: int(rng.integers(1, p)) for i in idx})


def random_nonzero_poly(rng, field, r, max_degree, max_terms=None) -> Polynomial:
    while True:
        d = random_poly(rng, field, r, max_degree, max_terms)
        if not d.is_zero():
            return d


def random_polyvector(rng, field, r: int, l: int, max_degree: int) -> PolyVector:
    return PolyVector([random_poly(rng, field, r, max_degree) for _ in range(l)])


def random_polymatrix(rng, field, r: int, k: int, l: int, max_degree: int) -> PolyMatrix:
    return PolyMatrix([random_polyvector(rng, field, r, l, max_degree) for _ in range(k)])


def random_series(rng, field, r: int, bound: int) -> TruncatedSeries:
    p = field.p if hasattr(field, "p") else int(field)
    return TruncatedSeries(field, r, bound, rng.integers(0, p, size=count_leq(r, bound)))


def random_series_vector(rng, field, r: int, l: int, bound: int) -> SeriesVector:
    return SeriesVector([random_series(rng, field, r, bound) for _ in range(l)])


def random_exponent(rng, r: int, max_degree: int):
    pts = ball(r, max_degree)
    return pts[int(rng.integers(len(pts)))]
