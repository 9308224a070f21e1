"""
Polynomials acting on power series through the shift.

``d . W`` denotes the polynomial operator in the shift,

    (d . W)_a = sum_b d_b * W_{a+b},

which is the adjoint of ``c -> c * d`` under the pairing
``<c, W> = sum_a c_a W_a``. Applying an operator of total degree ``g`` to a
series known up to degree ``D`` gives a series known up to ``D - g``.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError, OutsideBallError
from .monomials import check_exponent, psi, shift_index
from .polysys import PolyMatrix, Polynomial, PolyVector
from .series import SeriesVector, TruncatedSeries


def _same_space(d: Polynomial, W: TruncatedSeries):
    if d.r != W.r:
        raise DomainError(f"variable count mismatch: polynomial r={d.r}, series r={W.r}")
    if d.field != W.field:
        raise DomainError(f"field mismatch: {d.field} vs {W.field}")


def shift(b, W: TruncatedSeries) -> TruncatedSeries:
    """X^b . W: the coefficient at ``a`` becomes ``W_{a+b}``."""
    b = check_exponent(b, W.r)
    out_bound = W.bound - sum(b)
    if out_bound < -1:
        raise DomainError(f"shift by degree {sum(b)} exceeds series bound {W.bound} + 1")
    return TruncatedSeries(W.field, W.r, out_bound, W.values[shift_index(W.r, out_bound, b)])


def shift_vector(b, V: SeriesVector) -> SeriesVector:
    return SeriesVector([shift(b, c) for c in V])


def apply_poly(d: Polynomial, W: TruncatedSeries) -> TruncatedSeries:
    """d . W, known up to ``bound(W) - deg(d)``."""
    _same_space(d, W)
    out_bound = W.bound - max(d.degree, 0)
    if out_bound < -1:
        raise DomainError(f"operator degree {d.degree} exceeds series bound {W.bound} + 1")
    return _apply(d, W, out_bound)


def _apply(d: Polynomial, W: TruncatedSeries, out_bound: int) -> TruncatedSeries:
    p = W.field.p
    acc = np.zeros(len(shift_index(W.r, out_bound, (0,) * W.r)), dtype=np.int64)
    for b, c in d.items():
        acc = (acc + c * W.values[shift_index(W.r, out_bound, b)]) % p
    return TruncatedSeries(W.field, W.r, out_bound, acc)


def _row_apply(row: PolyVector, W: SeriesVector, out_bound: int) -> TruncatedSeries:
    if row.l != W.l:
        raise DomainError(f"length mismatch: polynomial row has {row.l} entries, series vector {W.l}")
    _same_space(row[0], W[0])
    acc = TruncatedSeries.zero(W.field, W.r, out_bound)
    for d, w in zip(row, W):
        if not d.is_zero():
            acc = acc + _apply(d, w, out_bound)
    return acc


def apply_matrix(R: PolyMatrix, W: SeriesVector) -> SeriesVector:
    """R . W in A^k for ``R`` in D^{k,l} and ``W`` in A^l.

    Every component is known up to ``bound(W) - deg(R)``.
    """
    out_bound = W.bound - max(R.degree, 0)
    if out_bound < -1:
        raise DomainError(f"matrix degree {R.degree} exceeds series bound {W.bound} + 1")
    return SeriesVector([_row_apply(row, W, out_bound) for row in R.rows])


def pairing_A(d: PolyVector, W: SeriesVector) -> TruncatedSeries:
    """The series-valued pairing ``sum_j d_j . W_j``."""
    out_bound = W.bound - max(d.degree, 0)
    if out_bound < -1:
        raise DomainError(f"operator degree {d.degree} exceeds series bound {W.bound} + 1")
    return _row_apply(d, W, out_bound)


def pairing_F(d: PolyVector | Polynomial, W: SeriesVector | TruncatedSeries) -> int:
    """The field-valued pairing ``sum_j sum_a d_{j,a} W_{j,a}``.

    Equals the constant term of ``pairing_A(d, W)``. Accepts a bare
    polynomial and series for the l = 1 case.
    """
    if isinstance(d, Polynomial):
        d = PolyVector([d])
    if isinstance(W, TruncatedSeries):
        W = SeriesVector([W])
    if d.l != W.l:
        raise DomainError(f"length mismatch: {d.l} vs {W.l}")
    _same_space(d[0], W[0])
    if d.degree > W.bound:
        raise OutsideBallError(
            f"polynomial of degree {d.degree} reads coefficients beyond the series bound {W.bound}"
        )
    p = W.field.p
    total = 0
    for dj, wj in zip(d, W):
        for b, c in dj.items():
            total += c * int(wj.values[psi(b)])
    return total % p
