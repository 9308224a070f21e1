"""
Exponent vectors and the graded lexicographic ranking of N^r.

Exponents are plain tuples of non-negative ints. The ranking ``psi`` orders
them by total degree first, and within one degree lexicographically with
X1 largest, so for r = 2 the enumeration starts

    (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), (3,0), ...

Under this order every total-degree ball ``{a : |a| <= D}`` is an initial
segment of the ranking. Truncated series rely on that.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

import numpy as np

from .errors import DomainError

Exponent = tuple[int, ...]

RANK_LIMIT = 2**63


def degree(a: Exponent) -> int:
    return sum(a)


def check_exponent(a, r: int | None = None) -> Exponent:
    a = tuple(int(x) for x in a)
    if r is not None and len(a) != r:
        raise DomainError(f"exponent {list(a)} should have {r} coordinates")
    if any(x < 0 for x in a):
        raise DomainError(f"exponent {list(a)} has a negative coordinate")
    return a


def count_leq(r: int, d: int) -> int:
    """Number of exponents in r variables with total degree <= d."""
    return comb(d + r, r) if d >= 0 else 0


def _count_eq(r: int, d: int) -> int:
    return comb(d + r - 1, r - 1) if d >= 0 else 0


def psi(a: Exponent) -> int:
    """Rank of ``a`` in graded lex order (0-based)."""
    a = check_exponent(a)
    r = len(a)
    rem = sum(a)
    idx = count_leq(r, rem - 1)
    for i in range(r - 1):
        # exponents agreeing on a[:i] but larger at position i come first
        idx += count_leq(r - i - 1, rem - a[i] - 1)
        rem -= a[i]
    if idx >= RANK_LIMIT:
        raise OverflowError(f"rank of {list(a)} does not fit in 64 bits")
    return idx


def psi_inv(i: int, r: int) -> Exponent:
    """The exponent of rank ``i`` in r variables."""
    if i < 0:
        raise DomainError(f"rank must be non-negative, got {i}")
    hi = 1
    while count_leq(r, hi) <= i:
        hi *= 2
    lo = 0
    while lo < hi:
        mid = (lo + hi) // 2
        if count_leq(r, mid) > i:
            hi = mid
        else:
            lo = mid + 1
    d = lo
    rel = i - count_leq(r, d - 1)
    out = []
    rem = d
    for pos in range(r - 1):
        m = r - pos - 1
        v = rem
        while True:
            n = _count_eq(m, rem - v)
            if rel < n:
                break
            rel -= n
            v -= 1
        out.append(v)
        rem -= v
    out.append(rem)
    return tuple(out)


def exponents_of_degree(r: int, d: int):
    """Yield all exponents of total degree ``d`` in decreasing lex order."""
    if r == 1:
        yield (d,)
        return
    for v in range(d, -1, -1):
        for rest in exponents_of_degree(r - 1, d - v):
            yield (v,) + rest


@lru_cache(maxsize=None)
def ball(r: int, bound: int) -> tuple[Exponent, ...]:
    """All exponents with ``|a| <= bound``, in psi order."""
    return tuple(a for d in range(bound + 1) for a in exponents_of_degree(r, d))


def window(n: int, r: int) -> tuple[Exponent, ...]:
    """The first ``n`` exponents in psi order."""
    if n < 0:
        raise DomainError(f"window size must be non-negative, got {n}")
    d = 0
    while count_leq(r, d) < n:
        d += 1
    return ball(r, d)[:n]


def sub_checked(a: Exponent, b: Exponent) -> Exponent | None:
    """``a - b`` when b <= a componentwise, otherwise None."""
    if len(a) != len(b):
        raise DomainError("exponents of different lengths")
    if all(y <= x for x, y in zip(a, b)):
        return tuple(x - y for x, y in zip(a, b))
    return None


def add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def grlex_key(a: Exponent):
    """Sort key agreeing with psi."""
    return (sum(a), tuple(-x for x in a))


@lru_cache(maxsize=None)
def shift_index(r: int, out_bound: int, b: Exponent) -> np.ndarray:
    """Ranks of ``a + b`` for every ``a`` in ``ball(r, out_bound)``."""
    idx = np.fromiter((psi(add(a, b)) for a in ball(r, out_bound)), dtype=np.int64)
    idx.setflags(write=False)
    return idx
