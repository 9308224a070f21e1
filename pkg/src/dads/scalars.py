"""
Exact arithmetic in GF(p) and dense linear algebra over it.

Field elements are plain Python ints held in canonical form ``0 <= a < p``.
Matrices are ``numpy.int64`` arrays; since ``p < 2**31`` every product of
two canonical entries fits in 63 bits, so elimination reduces after each
multiply-subtract and never overflows.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NotPrimeError

MAX_MODULUS = 2**31


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every ``n < 3_215_031_751``."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class GF:
    """The prime field GF(p)."""

    p: int

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, (int, np.integer)):
            raise NotPrimeError(f"modulus must be an integer, got {self.p!r}")
        object.__setattr__(self, "p", int(self.p))
        if not 2 <= self.p < MAX_MODULUS or not is_prime(self.p):
            raise NotPrimeError(f"{self.p} is not a prime in [2, 2**31)")

    def __call__(self, a: int) -> int:
        return int(a) % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def __repr__(self):
        return f"GF({self.p})"


def as_matrix(rows, p: int, cols: int | None = None) -> np.ndarray:
    """Coerce nested sequences to a canonical int64 matrix mod ``p``."""
    M = np.asarray(rows, dtype=np.int64)
    if M.size == 0 and M.ndim != 2:
        return np.zeros((0, cols or 0), dtype=np.int64)
    if M.ndim != 2:
        raise DomainError(f"expected a 2-d matrix, got shape {M.shape}")
    return M % p


def rref(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(p).

    Pivots are taken left to right, the pivot row being the first row at or
    below the current one with a nonzero entry. Zero rows are dropped from
    the returned matrix, so its height equals the rank.

    Returns:
        (R, pivots): R has shape (rank, cols); pivots lists the pivot columns.
    """
    A = as_matrix(M, p).copy()
    m, n = A.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.flatnonzero(A[row:, col])
        if nz.size == 0:
            continue
        found = row + int(nz[0])
        if found != row:
            A[[row, found]] = A[[found, row]]
        A[row] = A[row] * pow(int(A[row, col]), p - 2, p) % p
        factors = A[:, col].copy()
        factors[row] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            A[hit] = (A[hit] - np.outer(factors[hit], A[row]) % p) % p
        pivots.append(col)
        row += 1
    return A[:row], pivots


def rank(M: np.ndarray, p: int) -> int:
    return len(rref(M, p)[1])


def nullspace(M: np.ndarray, p: int) -> np.ndarray:
    """Canonical basis of ``{v : M v = 0}`` over GF(p).

    Each free column ``j`` (ascending) contributes one basis vector with a 1
    in position ``j``, zeros in the other free positions, and the pivot
    variables solved for. The result has shape ``(cols - rank, cols)``.
    """
    M = as_matrix(M, p)
    n = M.shape[1]
    R, pivots = rref(M, p)
    free = [j for j in range(n) if j not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, j in enumerate(free):
        basis[i, j] = 1
        basis[i, pivots] = -R[:, j] % p
    return basis


def row_span_equal(A: np.ndarray, B: np.ndarray, p: int) -> bool:
    """True when A and B (same column count) have the same row space."""
    RA, _ = rref(A, p)
    RB, _ = rref(B, p)
    return RA.shape == RB.shape and bool(np.array_equal(RA, RB))


def in_row_span(v, A: np.ndarray, p: int) -> bool:
    v = np.asarray(v, dtype=np.int64).reshape(1, -1) % p
    A = as_matrix(A, p, cols=v.shape[1])
    return rank(np.vstack([A, v]), p) == rank(A, p)


def solve(A: np.ndarray, b, p: int) -> np.ndarray | None:
    """One solution ``x`` of ``A x = b`` over GF(p), or None if inconsistent.

    Free variables are set to zero.
    """
    A = as_matrix(A, p)
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1) % p
    m, n = A.shape
    R, pivots = rref(np.hstack([A, b]), p)
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, col in enumerate(pivots):
        x[col] = R[i, n]
    return x
