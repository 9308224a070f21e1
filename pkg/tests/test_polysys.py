import pytest
from hypothesis import given, settings, strategies as st

from dads.errors import DomainError
from dads.polysys import PolyMatrix, Polynomial, PolyVector, poly_add, poly_mul, poly_scale, vec_matrix_mul
from dads.scalars import GF

from strategies import polynomials

F2, F3, F5, F7 = GF(2), GF(3), GF(5), GF(7)


def X(F, r=1, i=0):
    return Polynomial.variable(F, r, i)


def test_add_examples():
    a = Polynomial(F7, 2, {(1, 0): 3, (0, 0): 1})
    assert a + Polynomial.zero(F7, 2) == a
    assert poly_add(2 * X(F3), X(F3)).is_zero()
    s = poly_add(X(F5) + 1, X(F5) + 4)
    assert s.terms == {(1,): 2}
    assert poly_scale(3, a).terms == {(1, 0): 2, (0, 0): 3}


def test_mul_examples():
    assert (X(F7, 2, 0) * X(F7, 2, 1)).terms == {(1, 1): 1}
    a = Polynomial(F7, 2, {(2, 1): 5, (0, 0): 3})
    assert Polynomial.one(F7, 2) * a == a
    assert poly_mul(X(F2) + 1, X(F2) + 1).terms == {(2,): 1, (0,): 1}


def test_no_zero_terms_stored():
    a = Polynomial(F5, 1, {(1,): 5, (0,): 10, (2,): 1})
    assert a.terms == {(2,): 1}
    assert Polynomial(F5, 1, {(1,): 3}) - Polynomial(F5, 1, {(1,): 3}) == Polynomial.zero(F5, 1)


def test_mismatched_variable_count():
    with pytest.raises(DomainError):
        X(F7, 1) + X(F7, 2)
    with pytest.raises(DomainError):
        X(F7) * X(F5)
    with pytest.raises(DomainError):
        Polynomial(F7, 2, {(1,): 1})


def test_vec_matrix_mul_examples():
    x = X(F7)
    R = PolyMatrix([[x * x + 2, x], [3 * x, x + 1]])
    e1 = PolyVector.unit(F7, 1, 2, 0)
    assert vec_matrix_mul(e1, R) == R.rows[0]
    c = PolyVector([x + 1, 2 * x])
    assert vec_matrix_mul(c, PolyMatrix.identity(F7, 1, 2)) == c
    one = Polynomial.one(F7, 1)
    assert vec_matrix_mul(PolyVector([x]), PolyMatrix([[x, one]])) == PolyVector([x * x, x])
    with pytest.raises(DomainError):
        vec_matrix_mul(PolyVector([x]), R)


ring = st.sampled_from([F2, F5, F7]).flatmap(
    lambda F: st.integers(1, 3).flatmap(
        lambda r: st.tuples(*(polynomials(F, r, 3, 4) for _ in range(3)))
    )
)


@settings(max_examples=200, deadline=None)
@given(ring)
def test_ring_laws(abc):
    a, b, c = abc
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)


@settings(max_examples=200, deadline=None)
@given(ring)
def test_degree_is_additive(abc):
    a, b, _ = abc
    if not a.is_zero() and not b.is_zero():
        assert (a * b).degree == a.degree + b.degree


def test_matrix_mul_is_linear_in_c():
    x, y = X(F7, 2, 0), X(F7, 2, 1)
    R = PolyMatrix([[x, y, x * y], [1 + x, Polynomial.zero(F7, 2), y * y]])
    c1, c2 = PolyVector([x + 2, y]), PolyVector([y * 3, x * x])
    assert vec_matrix_mul(c1 + c2, R) == vec_matrix_mul(c1, R) + vec_matrix_mul(c2, R)
    assert vec_matrix_mul(c1 * x, R) == vec_matrix_mul(c1, R) * x


def test_repr():
    assert repr(X(F7, 2, 0) * 3 + 1) == "3*X1 + 1"
