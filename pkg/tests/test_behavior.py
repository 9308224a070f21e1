import itertools
from math import comb

import numpy as np
import pytest

from dads.behavior import (AutoregressiveSystem, is_member, orthogonal_of_polys, orthogonal_of_series,
                           quotient_pairing_check, shift_invariance_check, solve_behavior,
                           triple_perp_check)
from dads.errors import DomainError
from dads.laws import random_generators
from dads.monomials import ball, count_leq
from dads.polysys import PolyMatrix, Polynomial, PolyVector, vec_matrix_mul
from dads.sampling import random_polymatrix, random_polyvector
from dads.scalars import GF, in_row_span, rank, row_span_equal, solve
from dads.series import SeriesVector, TruncatedSeries, from_function
from dads.shiftop import apply_matrix

from test_shiftop import direct_apply

F2, F3, F5, F7, F101 = (GF(p) for p in (2, 3, 5, 7, 101))


def X(F, r=1, i=0):
    return Polynomial.variable(F, r, i)


def brute_kernel_size(R: PolyMatrix, D: int) -> int:
    """Count every coefficient assignment on the ball that R annihilates."""
    p, r, l = R.field.p, R.r, R.l
    n = count_leq(r, D)
    count = 0
    for vals in itertools.product(range(p), repeat=l * n):
        W = [TruncatedSeries(R.field, r, D, vals[j * n:(j + 1) * n]) for j in range(l)]
        ok = True
        for row in R.rows:
            eq = D - max(row.degree, 0)
            total = TruncatedSeries.zero(R.field, r, eq)
            for d, w in zip(row, W):
                total = total + direct_apply(d, w).restrict(eq)
            if not total.is_zero():
                ok = False
                break
        count += ok
    return count


BRUTE_CASES = [
    (lambda: PolyMatrix([[X(F2) - 1]]), 5),
    (lambda: PolyMatrix([[X(F2) ** 2 + X(F2) + 1]]), 6),
    (lambda: PolyMatrix([[X(F3, 2, 0) * X(F3, 2, 1) - X(F3, 2, 0) - X(F3, 2, 1)]]), 2),
    (lambda: PolyMatrix([[X(F3, 2, 0) - 1], [X(F3, 2, 1) + 1]]), 2),
    (lambda: PolyMatrix([[X(F2) + 1, X(F2)], [Polynomial.zero(F2, 1), X(F2) ** 2]]), 3),
    (lambda: PolyMatrix([[X(F2) ** 2, Polynomial.one(F2, 1)], [X(F2), X(F2) + 1]]), 4),
]


@pytest.mark.parametrize("case", range(len(BRUTE_CASES)))
def test_dimension_against_enumeration(case):
    make, D = BRUTE_CASES[case]
    R = make()
    slc = solve_behavior(R, D)
    assert R.field.p ** slc.dim == brute_kernel_size(R, D)
    assert slc.certify()


def test_constant_recurrence():
    R = PolyMatrix([[X(F7) - 1]])
    for D in range(1, 11):
        slc = solve_behavior(R, D)
        assert slc.dim == 1
        assert slc.basis[0][0] == from_function(F7, 1, lambda a: 1, D)


def fibonacci(n, p, w0=0, w1=1):
    w = [w0, w1]
    while len(w) <= n:
        w.append((w[-1] + w[-2]) % p)
    return w


def test_fibonacci():
    x = X(F101)
    slc = solve_behavior(PolyMatrix([[x * x - x - 1]]), 10)
    assert slc.dim == 2
    B = slc.matrix()
    coef = solve(B[:, :2].T, [0, 1], 101)
    traj = coef @ B % 101
    assert traj.tolist() == fibonacci(10, 101)
    assert traj[10] == 55


@pytest.mark.parametrize("D", range(2, 9))
def test_pascal(D):
    x1, x2 = X(F101, 2, 0), X(F101, 2, 1)
    slc = solve_behavior(PolyMatrix([[x1 * x2 - x1 - x2]]), D)
    assert slc.dim == 2 * D + 1
    pts = ball(2, D)
    boundary = [i for i, a in enumerate(pts) if 0 in a]
    assert len(boundary) == 2 * D + 1
    B = slc.matrix()
    coef = solve(B[:, boundary].T, [1] * len(boundary), 101)
    traj = coef @ B % 101
    assert traj.tolist() == [comb(a[0] + a[1], a[0]) % 101 for a in pts]


def test_unit_system():
    assert solve_behavior(PolyMatrix([[Polynomial.one(F7, 2)]]), 4).dim == 0


def test_bound_below_degree():
    with pytest.raises(DomainError):
        solve_behavior(PolyMatrix([[X(F7) ** 3]]), 2)


def test_is_member():
    x1, x2 = X(F101, 2, 0), X(F101, 2, 1)
    pascal = SeriesVector([from_function(F101, 2, lambda a: comb(a[0] + a[1], a[0]), 7)])
    assert is_member(PolyMatrix([[x1 * x2 - x1 - x2]]), pascal)
    R = PolyMatrix([[X(F7) - 1]])
    assert is_member(R, SeriesVector([from_function(F7, 1, lambda a: 1, 5)]))
    v = is_member(R, SeriesVector([TruncatedSeries.from_coeffs(F7, 1, 3, {(1,): 1})]))
    assert not v
    assert v.data == {"row": 0, "exp": [0], "value": 1}
    assert v.checked_degree == 2
    with pytest.raises(DomainError):
        is_member(PolyMatrix([[X(F7) ** 3]]), SeriesVector([TruncatedSeries.zero(F7, 1, 2)]))


def test_orthogonal_of_polys():
    slc = orthogonal_of_polys([PolyVector.unit(F7, 1, 2, 0)], 4)
    assert slc.dim == 5
    assert all(V[0].is_zero() for V in slc.basis)
    one = orthogonal_of_polys([PolyVector([X(F7) - 1])], 6)
    assert one.dim == 1
    two = orthogonal_of_polys([PolyVector([X(F7) - 1]), PolyVector([X(F7) ** 2 - 1])], 6)
    assert one.same_span(two)
    with pytest.raises(DomainError):
        orthogonal_of_polys([], 3)


def test_orthogonal_of_series():
    Q = orthogonal_of_series([SeriesVector.zero(F7, 2, 1, 4)], 2)
    assert len(Q) == count_leq(2, 2)
    assert sorted(tuple(q[0].terms.items()) for q in Q) == sorted(((a, 1),) for a in ball(2, 2))
    ones = SeriesVector([from_function(F7, 1, lambda a: 1, 5)])
    assert orthogonal_of_series([ones], 1) == [PolyVector([X(F7) - 1])]
    delta = SeriesVector([TruncatedSeries.from_coeffs(F7, 1, 4, {(0,): 1})])
    assert orthogonal_of_series([delta], 2) == [PolyVector([X(F7)]), PolyVector([X(F7) ** 2])]
    with pytest.raises(DomainError):
        orthogonal_of_series([ones], 6)


def test_triple_perp_examples():
    v = triple_perp_check([PolyVector([X(F7) - 1])], 8, 4)
    assert v
    assert triple_perp_check([PolyVector.unit(F7, 2, 2, 1)], 6, 2)
    with pytest.raises(DomainError):
        triple_perp_check([PolyVector([X(F7) ** 3])], 8, 2)


def test_triple_perp_random():
    for t in range(40):
        rng = np.random.default_rng([11, t])
        P = random_generators(rng, F5)
        assert triple_perp_check(P, 8, 4), t


def test_shift_invariance_examples():
    x = X(F101)
    assert shift_invariance_check(solve_behavior(PolyMatrix([[x * x - x - 1]]), 10))
    assert shift_invariance_check(solve_behavior(PolyMatrix([[X(F7) - 1]]), 5))
    x1, x2 = X(F101, 2, 0), X(F101, 2, 1)
    assert shift_invariance_check(solve_behavior(PolyMatrix([[x1 * x2 - x1 - x2]]), 6))
    with pytest.raises(DomainError):
        shift_invariance_check(solve_behavior(PolyMatrix([[x * x]]), 2))


def test_quotient_pairing_examples():
    P = [PolyVector([X(F7) - 1])]
    slc = orthogonal_of_polys(P, 6)
    q = vec_matrix_mul(PolyVector([X(F7) + 1]), PolyMatrix(P))
    assert q == PolyVector([X(F7) ** 2 - 1])
    from dads.shiftop import pairing_A
    assert pairing_A(q, slc.basis[0]).is_zero()
    assert pairing_A(PolyVector.zero(F7, 1, 1), slc.basis[0]).is_zero()
    assert quotient_pairing_check(P, 6, trials=20)


def test_quotient_pairing_random():
    for t in range(30):
        rng = np.random.default_rng([12, t])
        assert quotient_pairing_check(random_generators(rng, F7), 8, trials=2, seed=t)


def test_kernel_certificate_random():
    for t in range(30):
        rng = np.random.default_rng([13, t])
        R = random_polymatrix(rng, F5, int(rng.integers(1, 3)), 2, 2, 2)
        slc = solve_behavior(R, 6)
        assert slc.certify()
        for V in slc.basis:
            img = apply_matrix(R, V)
            assert img.is_zero()


def test_monotone_consistency():
    for t in range(20):
        rng = np.random.default_rng([14, t])
        R = random_polymatrix(rng, F5, int(rng.integers(1, 3)), 2, 2, 2)
        g = max(R.degree, 0)
        hi = solve_behavior(R, 7)
        for D in range(g, 7):
            lo = solve_behavior(R, D)
            restricted = hi.restrict_matrix(D)
            assert rank(np.vstack([lo.matrix(), restricted]), 5) == lo.dim


def test_redundant_generator_invariance():
    # q is a D-combination of P without cancellation of leading forms,
    # which is exactly when its equations are implied on the truncated ball
    checked = 0
    for t in range(200):
        rng = np.random.default_rng([15, t])
        P = random_generators(rng, F5)
        r, l = P[0].r, P[0].l
        cs = [random_polyvector(rng, F5, r, 1, 2)[0] for _ in P]
        q = vec_matrix_mul(PolyVector(cs), PolyMatrix(P))
        top = max((c.degree + p.degree for c, p in zip(cs, P) if not c.is_zero() and not p.is_zero()),
                  default=-1)
        if q.is_zero() or q.degree != top or q.degree > 6:
            continue
        a = orthogonal_of_polys(P, 7)
        b = orthogonal_of_polys(P + [q], 7)
        assert a.same_span(b), t
        checked += 1
    assert checked >= 50


def test_system_properties():
    R = PolyMatrix([[X(F7, 2, 0), X(F7, 2, 1) ** 2]])
    sys_ = AutoregressiveSystem(R)
    assert (sys_.g, sys_.k, sys_.l, sys_.r) == (2, 1, 2, 2)
