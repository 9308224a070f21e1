"""
Truncated power series in F[[Y1..Yr]] and vectors of them.

A ``TruncatedSeries`` knows its coefficients exactly on the ball
``|a| <= bound`` and nothing beyond it. Reading outside the ball raises
``OutsideBallError``: an unknown coefficient is not a zero coefficient.
``bound == -1`` is the series about which nothing is known.

Coefficients are kept densely as an int64 array in psi order, which is the
same thing as listing the ball degree by degree.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping, Sequence

import numpy as np

from .errors import DomainError, OutsideBallError
from .monomials import Exponent, ball, check_exponent, count_leq, psi
from .scalars import GF


def _field(field) -> GF:
    return field if isinstance(field, GF) else GF(field)


class TruncatedSeries:
    __slots__ = ("field", "r", "bound", "values")

    def __init__(self, field, r: int, bound: int, values=None):
        self.field = _field(field)
        self.r = int(r)
        self.bound = int(bound)
        if self.r < 1:
            raise DomainError("a series needs at least one variable")
        if self.bound < -1:
            raise DomainError(f"bound must be >= -1, got {self.bound}")
        n = count_leq(self.r, self.bound)
        if values is None:
            vals = np.zeros(n, dtype=np.int64)
        else:
            vals = np.asarray(values, dtype=np.int64) % self.field.p
            if vals.shape != (n,):
                raise DomainError(
                    f"expected {n} coefficients for r={self.r}, bound={self.bound}, "
                    f"got shape {vals.shape}"
                )
        vals.setflags(write=False)
        self.values = vals

    @classmethod
    def zero(cls, field, r, bound):
        return cls(field, r, bound)

    @classmethod
    def from_coeffs(cls, field, r, bound, coeffs: Mapping[Exponent, int]):
        vals = np.zeros(count_leq(r, bound), dtype=np.int64)
        for exp, c in coeffs.items():
            exp = check_exponent(exp, r)
            if sum(exp) > bound:
                raise OutsideBallError(f"exponent {list(exp)} lies outside the ball of degree {bound}")
            vals[psi(exp)] += int(c) % _field(field).p
        return cls(field, r, bound, vals)

    @property
    def coeffs(self) -> dict[Exponent, int]:
        """Nonzero coefficients keyed by exponent, in psi order."""
        pts = ball(self.r, self.bound)
        return {pts[i]: int(self.values[i]) for i in np.flatnonzero(self.values)}

    def coeff(self, exp) -> int:
        exp = check_exponent(exp, self.r)
        if sum(exp) > self.bound:
            raise OutsideBallError(
                f"coefficient at {list(exp)} is unknown (series known up to degree {self.bound})"
            )
        return int(self.values[psi(exp)])

    def __getitem__(self, exp):
        return self.coeff(exp)

    def is_zero(self) -> bool:
        return not self.values.any()

    def restrict(self, bound: int) -> "TruncatedSeries":
        if bound > self.bound:
            raise DomainError(f"cannot extend a series known to degree {self.bound} to {bound}")
        return TruncatedSeries(self.field, self.r, bound, self.values[: count_leq(self.r, bound)])

    def _check(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected a TruncatedSeries, got {type(other).__name__}")
        if other.r != self.r:
            raise DomainError(f"variable count mismatch: {self.r} vs {other.r}")
        if other.field != self.field:
            raise DomainError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other):
        self._check(other)
        b = min(self.bound, other.bound)
        n = count_leq(self.r, b)
        return TruncatedSeries(self.field, self.r, b, self.values[:n] + other.values[:n])

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int) -> "TruncatedSeries":
        c = int(c) % self.field.p
        return TruncatedSeries(self.field, self.r, self.bound, self.values * c)

    def __mul__(self, c):
        if isinstance(c, (int, np.integer)):
            return self.scale(int(c))
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            (self.field, self.r, self.bound) == (other.field, other.r, other.bound)
            and bool(np.array_equal(self.values, other.values))
        )

    __hash__ = None

    def __repr__(self):
        terms = ", ".join(f"{list(e)}: {c}" for e, c in self.coeffs.items())
        return f"TruncatedSeries(GF({self.field.p}), r={self.r}, bound={self.bound}, {{{terms}}})"


def monomial_series(field, exp, bound: int) -> TruncatedSeries:
    """The series Y^exp, known up to degree ``bound``."""
    exp = check_exponent(exp)
    if sum(exp) > bound:
        raise OutsideBallError(f"Y^{list(exp)} has degree above the bound {bound}")
    return TruncatedSeries.from_coeffs(field, len(exp), bound, {exp: 1})


def from_function(field, r: int, f: Callable[[Exponent], int], bound: int) -> TruncatedSeries:
    """Tabulate ``f`` on the ball of degree ``bound``."""
    field = _field(field)
    vals = [int(f(a)) % field.p for a in ball(r, bound)]
    return TruncatedSeries(field, r, bound, np.array(vals, dtype=np.int64))


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_scale(c: int, a: TruncatedSeries) -> TruncatedSeries:
    return a.scale(c)


class SeriesVector:
    """A column vector in A^l; all components share r, field and bound."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence[TruncatedSeries]):
        comps = tuple(components)
        if not comps:
            raise DomainError("a series vector needs at least one component")
        for c in comps[1:]:
            comps[0]._check(c)
            if c.bound != comps[0].bound:
                raise DomainError("series vector components must share one bound")
        self.components = comps

    @classmethod
    def zero(cls, field, r, l, bound):
        return cls([TruncatedSeries.zero(field, r, bound) for _ in range(l)])

    @classmethod
    def from_dense(cls, field, r, l, bound, vec):
        vec = np.asarray(vec, dtype=np.int64)
        n = count_leq(r, bound)
        if vec.shape != (l * n,):
            raise DomainError(f"expected {l * n} coefficients, got shape {vec.shape}")
        return cls([TruncatedSeries(field, r, bound, vec[i * n:(i + 1) * n]) for i in range(l)])

    def to_dense(self) -> np.ndarray:
        """Coefficients ordered by (component, psi)."""
        return np.concatenate([c.values for c in self.components])

    @property
    def field(self) -> GF:
        return self.components[0].field

    @property
    def r(self) -> int:
        return self.components[0].r

    @property
    def bound(self) -> int:
        return self.components[0].bound

    @property
    def l(self) -> int:
        return len(self.components)

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def restrict(self, bound: int) -> "SeriesVector":
        return SeriesVector([c.restrict(bound) for c in self.components])

    def __add__(self, other):
        if other.l != self.l:
            raise DomainError(f"vector length mismatch: {self.l} vs {other.l}")
        return SeriesVector([a + b for a, b in zip(self, other)])

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c: int) -> "SeriesVector":
        return SeriesVector([a.scale(c) for a in self])

    def __eq__(self, other):
        if not isinstance(other, SeriesVector):
            return NotImplemented
        return self.components == other.components

    __hash__ = None

    def __repr__(self):
        return "SeriesVector(" + ", ".join(repr(c) for c in self) + ")"
