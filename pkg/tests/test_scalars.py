import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dads.errors import NotPrimeError
from dads.scalars import GF, in_row_span, is_prime, nullspace, rank, row_span_equal, rref, solve


def brute_inverse(a, p):
    return next(b for b in range(p) if a * b % p == 1)


def brute_rank(M, p):
    """Rank from the size of the row space, enumerated exhaustively."""
    M = np.asarray(M, dtype=np.int64) % p
    span = {tuple(np.array(c) @ M % p) for c in itertools.product(range(p), repeat=M.shape[0])}
    return round(math.log(len(span), p))


def test_field_ops():
    F = GF(7)
    assert F.add(3, 5) == 1
    assert F.inv(3) == brute_inverse(3, 7) == 5
    assert all(F.mul(a, 1) == a for a in range(7))
    assert F.neg(3) == 4
    assert F.sub(2, 5) == 4


@pytest.mark.parametrize("p", [2, 3, 5, 7, 101, 65537, 2**31 - 1])
def test_inverse_against_brute_force(p):
    F = GF(p)
    for a in range(1, min(p, 200)):
        assert F.mul(a, F.inv(a)) == 1
    if p < 200:
        assert all(F.inv(a) == brute_inverse(a, p) for a in range(1, p))


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        GF(7).inv(0)


@pytest.mark.parametrize("n", [0, 1, 4, 9, 91, 561, 2**31 + 11, 2**32 + 15, 3.0, True])
def test_rejects_non_primes(n):
    with pytest.raises(NotPrimeError):
        GF(n)


def test_primality_agrees_with_trial_division():
    small = [n for n in range(2, 5000) if all(n % q for q in range(2, math.isqrt(n) + 1))]
    assert [n for n in range(5000) if is_prime(n)] == small


def test_nullspace_examples():
    Z = nullspace(np.zeros((2, 3), dtype=np.int64), 5)
    assert Z.tolist() == np.eye(3, dtype=int).tolist()
    assert nullspace(np.eye(3, dtype=np.int64), 5).shape == (0, 3)
    # brute force: every v in GF(5)^2 with M v = 0
    M = np.array([[1, 2], [2, 4]])
    kernel = [v for v in itertools.product(range(5), repeat=2) if not (M @ v % 5).any()]
    assert len(kernel) == 5
    N = nullspace(M, 5)
    assert N.tolist() == [[3, 1]]
    assert (3, 1) in kernel


def test_nullspace_of_empty_matrix():
    assert nullspace(np.zeros((0, 4), dtype=np.int64), 3).tolist() == np.eye(4, dtype=int).tolist()


matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.sampled_from([2, 3, 5]).flatmap(
            lambda p: st.tuples(
                st.just(p),
                st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n), min_size=m, max_size=m),
            )
        )
    )
)


@settings(max_examples=300, deadline=None)
@given(matrices)
def test_rank_nullity_against_row_space_enumeration(pm):
    p, rows = pm
    M = np.array(rows, dtype=np.int64)
    N = nullspace(M, p)
    assert not (M @ N.T % p).any()
    assert rank(M, p) == brute_rank(M, p)
    assert len(N) + rank(M, p) == M.shape[1]
    if len(N):
        assert rank(N, p) == len(N)


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_rref_shape(pm):
    p, rows = pm
    R, piv = rref(rows, p)
    assert len(R) == len(piv)
    for i, c in enumerate(piv):
        assert R[i, c] == 1
        assert (R[:, c] == np.eye(len(piv), dtype=np.int64)[i]).all()
    assert row_span_equal(R, np.array(rows), p)


def test_nullspace_is_deterministic():
    rng = np.random.default_rng(3)
    M = rng.integers(0, 101, size=(6, 9))
    a, b = nullspace(M, 101), nullspace(M.copy(), 101)
    assert a.tobytes() == b.tobytes()


def test_span_helpers():
    A = np.array([[1, 0, 2], [0, 1, 1]])
    assert in_row_span([2, 3, 7], A, 11)
    assert not in_row_span([0, 0, 1], A, 11)
    x = solve(A, [2, 3], 11)
    assert (A @ x % 11).tolist() == [2, 3]
    assert solve(np.array([[1, 1], [1, 1]]), [0, 1], 5) is None
