"""
Behaviors Ker R at finite truncation, orthogonals, and structural checks.

A slice at bound ``D`` is the space of series vectors known up to degree
``D`` whose image under each row ``R_k`` vanishes on the ball of degree
``D - deg(R_k)``, the part of that image the data determines. Every verdict
here is a statement about these finite windows: a pass certifies a
property up to the checked degree, not for the infinite objects.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .monomials import Exponent, ball, count_leq, psi, shift_index
from .polysys import PolyMatrix, Polynomial, PolyVector, vec_matrix_mul
from .scalars import in_row_span, nullspace, row_span_equal
from .sampling import random_polyvector
from .series import SeriesVector
from .shiftop import apply_matrix, pairing_A, shift_vector


@dataclass(frozen=True)
class AutoregressiveSystem:
    """The kernel representation ``Ker R`` of a polynomial matrix R in D^{k,l}."""

    R: PolyMatrix

    @property
    def g(self) -> int:
        return max(self.R.degree, 0)

    @property
    def field(self):
        return self.R.field

    @property
    def r(self) -> int:
        return self.R.r

    @property
    def k(self) -> int:
        return self.R.k

    @property
    def l(self) -> int:
        return self.R.l


@dataclass(frozen=True)
class Verdict:
    """Outcome of a finite-window check.

    ``checked_degree`` is the largest degree up to which the claim was
    verified; ``detail`` locates the first violation when ``passed`` is False.
    """

    passed: bool
    checked_degree: int | None = None
    detail: str = ""
    data: dict = field(default_factory=dict, compare=False, repr=False)

    def __bool__(self):
        return self.passed


@dataclass(frozen=True)
class BehaviorSlice:
    system: AutoregressiveSystem
    bound: int
    basis: tuple[SeriesVector, ...]
    equation_degree: int | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def field(self):
        return self.system.field

    def matrix(self) -> np.ndarray:
        """Basis as rows of coefficients ordered by (component, psi)."""
        n = self.system.l * count_leq(self.system.r, self.bound)
        if not self.basis:
            return np.zeros((0, n), dtype=np.int64)
        return np.vstack([v.to_dense() for v in self.basis])

    def restrict_matrix(self, bound: int) -> np.ndarray:
        if not self.basis:
            n = self.system.l * count_leq(self.system.r, bound)
            return np.zeros((0, n), dtype=np.int64)
        return np.vstack([v.restrict(bound).to_dense() for v in self.basis])

    def certify(self) -> Verdict:
        """Re-check that every basis vector is annihilated by R."""
        for i, V in enumerate(self.basis):
            v = is_member(self.system, V, equation_degree=self.equation_degree)
            if not v:
                return Verdict(False, v.checked_degree, f"basis vector {i}: {v.detail}")
        return Verdict(True, self.bound - self.system.g)

    def same_span(self, other: "BehaviorSlice") -> bool:
        b = min(self.bound, other.bound)
        return row_span_equal(self.restrict_matrix(b), other.restrict_matrix(b), self.field.p)


def _row_balls(R: PolyMatrix, D: int, equation_degree: int | None) -> list[int]:
    if equation_degree is not None:
        return [D - equation_degree] * R.k
    return [D - max(g, 0) for g in R.row_degrees()]


def kernel_equations(R: PolyMatrix, D: int, equation_degree: int | None = None) -> np.ndarray:
    """Coefficient matrix of ``(R . W)_{k,a} = 0`` in the unknowns ``W_{j,a}``.

    Unknowns are ordered by (component j, psi(a)) over the ball of degree
    ``D``; equations by (row k, psi(a)).
    """
    r, n = R.r, count_leq(R.r, D)
    blocks = []
    for row, eq_bound in zip(R.rows, _row_balls(R, D, equation_degree)):
        m = count_leq(r, eq_bound)
        block = np.zeros((m, R.l * n), dtype=np.int64)
        rows_idx = np.arange(m)
        for j, d in enumerate(row):
            for b, c in d.items():
                cols = j * n + shift_index(r, eq_bound, b)
                block[rows_idx, cols] += c
        blocks.append(block % R.field.p)
    return np.vstack(blocks)


def solve_behavior(system: AutoregressiveSystem | PolyMatrix, D: int,
                   equation_degree: int | None = None) -> BehaviorSlice:
    """Basis of the truncated kernel of R at bound ``D``.

    By default row ``R_k`` is enforced on the ball of degree
    ``D - deg(R_k)``. Passing ``equation_degree`` enforces every row on the
    single ball ``D - equation_degree`` instead.
    """
    if isinstance(system, PolyMatrix):
        system = AutoregressiveSystem(system)
    g = system.g if equation_degree is None else equation_degree
    if equation_degree is not None and equation_degree < system.g:
        raise DomainError(f"equation degree {equation_degree} is below the system degree {system.g}")
    if D < g:
        raise DomainError(f"bound {D} is below the system degree {g}")
    R = system.R
    M = kernel_equations(R, D, equation_degree)
    N = nullspace(M, R.field.p)
    basis = tuple(SeriesVector.from_dense(R.field, R.r, R.l, D, v) for v in N)
    return BehaviorSlice(system, D, basis, equation_degree)


def is_member(system: AutoregressiveSystem | PolyMatrix, W: SeriesVector,
              equation_degree: int | None = None) -> Verdict:
    """Check ``R . W = 0`` on every coefficient the data of W determines.

    A pass certifies membership up to degree ``bound(W) - g`` only.
    """
    if isinstance(system, PolyMatrix):
        system = AutoregressiveSystem(system)
    R = system.R
    if W.l != R.l:
        raise DomainError(f"series vector has {W.l} components, system expects {R.l}")
    g = system.g if equation_degree is None else equation_degree
    if W.bound < g:
        raise DomainError(f"series bound {W.bound} is below the system degree {g}")
    for kappa, (row, eq_bound) in enumerate(zip(R.rows, _row_balls(R, W.bound, equation_degree))):
        image = pairing_A(row, W).restrict(eq_bound)
        nz = np.flatnonzero(image.values)
        if nz.size:
            a = ball(R.r, eq_bound)[int(nz[0])]
            value = int(image.values[nz[0]])
            return Verdict(
                False, W.bound - g,
                f"row {kappa}: coefficient at {list(a)} is {value}",
                {"row": kappa, "exp": list(a), "value": value},
            )
    return Verdict(True, W.bound - g)


def _stack(P: Sequence[PolyVector]) -> PolyMatrix:
    if not P:
        raise DomainError("the generating set P must be nonempty")
    return PolyMatrix(list(P))


def orthogonal_of_polys(P: Sequence[PolyVector], D: int,
                        equation_degree: int | None = None) -> BehaviorSlice:
    """P-perp at bound ``D``: stack the generators as rows and solve."""
    return solve_behavior(AutoregressiveSystem(_stack(P)), D, equation_degree)


def poly_space_dense(d: PolyVector, d_max: int) -> np.ndarray:
    """Coefficients of ``d`` ordered by (component, psi) over degree <= d_max."""
    n = count_leq(d.r, d_max)
    out = np.zeros(d.l * n, dtype=np.int64)
    for j, comp in enumerate(d):
        for b, c in comp.items():
            if sum(b) > d_max:
                raise DomainError(f"polynomial degree {comp.degree} exceeds {d_max}")
            out[j * n + psi(b)] = c
    return out


def poly_from_dense(field, r: int, l: int, d_max: int, vec) -> PolyVector:
    n = count_leq(r, d_max)
    pts = ball(r, d_max)
    comps = []
    for j in range(l):
        seg = vec[j * n:(j + 1) * n]
        comps.append(Polynomial(field, r, {pts[i]: int(seg[i]) for i in np.flatnonzero(seg)}))
    return PolyVector(comps)


def series_orthogonal_equations(Q: Sequence[SeriesVector], d_max: int) -> np.ndarray:
    if not Q:
        raise DomainError("the series set Q must be nonempty")
    first = Q[0]
    for W in Q[1:]:
        if W.l != first.l or W.r != first.r or W.field != first.field:
            raise DomainError("series vectors in Q must share field, r and l")
    D = min(W.bound for W in Q)
    if d_max > D:
        raise DomainError(f"d_max={d_max} exceeds the series bound {D}")
    r, l, p = first.r, first.l, first.field.p
    eq_bound = D - d_max
    # table[i, j] = psi(a_i + b_j) for a_i in ball(eq_bound), b_j in ball(d_max)
    table = np.stack([shift_index(r, eq_bound, b) for b in ball(r, d_max)], axis=1)
    blocks = []
    for W in Q:
        blocks.append(np.hstack([w.values[table] for w in W]))
    return np.vstack(blocks) % p


def orthogonal_of_series(Q: Sequence[SeriesVector], d_max: int) -> list[PolyVector]:
    """Basis of the polynomial vectors of degree <= d_max that annihilate Q.

    The condition ``p . W = 0`` is imposed on the ball of degree
    ``D - d_max`` where D is the smallest bound in Q. Truncation makes this
    an over-approximation of the true orthogonal: a returned vector is only
    certified to annihilate Q up to that degree.
    """
    M = series_orthogonal_equations(Q, d_max)
    first = Q[0]
    N = nullspace(M, first.field.p)
    return [poly_from_dense(first.field, first.r, first.l, d_max, v) for v in N]


def triple_perp_check(P: Sequence[PolyVector], D: int, d_max: int) -> Verdict:
    """Check P-perp == P-perp-perp-perp on the ball of degree D, and P in P-perp-perp.

    The middle orthogonal is taken among polynomials of degree <= d_max and
    certified on the ball ``D - d_max``; the third orthogonal enforces its
    generators on that same ball so that all three are compared with one
    consistent notion of truncation.
    """
    R = _stack(P)
    if d_max < R.degree:
        raise DomainError(f"d_max={d_max} is below the degree {R.degree} of P")
    if D < d_max:
        raise DomainError(f"bound {D} is below d_max={d_max}")
    p = R.field.p
    S1 = solve_behavior(AutoregressiveSystem(R), D)
    n = R.l * count_leq(R.r, D)
    if S1.dim == 0:
        Q1: list[PolyVector] = [PolyVector.unit(R.field, R.r, R.l, j) for j in range(R.l)]
        Q1 = [v * Polynomial.monomial(R.field, b) for v in Q1 for b in ball(R.r, d_max)]
    else:
        Q1 = orthogonal_of_series(S1.basis, d_max)
    Qmat = np.zeros((len(Q1), R.l * count_leq(R.r, d_max)), dtype=np.int64)
    for i, q in enumerate(Q1):
        Qmat[i] = poly_space_dense(q, d_max)
    for i, gen in enumerate(P):
        if not in_row_span(poly_space_dense(gen, d_max), Qmat, p):
            return Verdict(False, D, f"generator {i} is not in the double orthogonal",
                           {"generator": i})
    if Q1:
        S2 = orthogonal_of_polys(Q1, D, equation_degree=d_max)
        S2mat = S2.matrix()
    else:
        S2mat = np.eye(n, dtype=np.int64)
    if not row_span_equal(S1.matrix(), S2mat, p):
        return Verdict(False, D, f"first and third orthogonal differ (dims {S1.dim} vs {len(S2mat)})",
                       {"dim1": S1.dim, "dim3": len(S2mat)})
    return Verdict(True, D, f"dim {S1.dim}, double orthogonal spanned by {len(Q1)} vectors")


def shift_invariance_check(slc: BehaviorSlice) -> Verdict:
    """Every unit shift of every basis vector is again in the behavior."""
    sys_, D = slc.system, slc.bound
    g = sys_.g if slc.equation_degree is None else slc.equation_degree
    if D < g + 1:
        raise DomainError(f"bound {D} is too small to shift (needs >= {g + 1})")
    r = sys_.r
    for i, V in enumerate(slc.basis):
        for e in range(r):
            b = tuple(int(j == e) for j in range(r))
            v = is_member(sys_, shift_vector(b, V), equation_degree=slc.equation_degree)
            if not v:
                return Verdict(False, D - 1 - g, f"basis vector {i} shifted by {list(b)}: {v.detail}")
    return Verdict(True, D - 1 - g)


def quotient_pairing_check(P: Sequence[PolyVector], D: int, trials: int, seed: int = 0,
                           max_degree: int = 2, slc: BehaviorSlice | None = None) -> Verdict:
    """Check that ``<c . R_P, W>_A`` vanishes for every slice vector W.

    ``c`` is drawn at random in D^k with entries of degree <= max_degree.
    The comparison is made on the ball where ``c . R_P`` is determined by
    data the slice constrains: ``D - max_k(deg c_k + deg R_k)``.
    """
    R = _stack(P)
    if slc is None:
        slc = orthogonal_of_polys(P, D)
    row_deg = [max(g, 0) for g in R.row_degrees()]
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        c = random_polyvector(rng, R.field, R.r, R.k, max_degree)
        q = vec_matrix_mul(c, R)
        sound = D - max((max(ci.degree, 0) + g for ci, g in zip(c, row_deg)), default=0)
        if sound < 0:
            continue
        for i, W in enumerate(slc.basis):
            image = pairing_A(q, W).restrict(sound)
            if not image.is_zero():
                return Verdict(False, sound, f"trial {t}, basis vector {i}: nonzero pairing",
                               {"trial": t, "c": c, "basis": i})
    return Verdict(True, D - slc.system.g)
