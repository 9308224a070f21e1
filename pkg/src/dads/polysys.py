"""
Sparse polynomials in F[X1..Xr], row vectors of them, and polynomial matrices.

Vectors are rows: a matrix ``R`` in D^{k,l} acts on ``c`` in D^k from the
right, ``c -> c . R``. Transposed conventions are common elsewhere, so be
careful when importing matrices from other tools.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence

from .errors import DomainError
from .monomials import Exponent, add, check_exponent, grlex_key
from .scalars import GF


def _field(field) -> GF:
    return field if isinstance(field, GF) else GF(field)


class Polynomial:
    """Element of F[X1..Xr] stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored. Instances are treated as immutable.
    """

    __slots__ = ("field", "r", "_terms")

    def __init__(self, field, r: int, terms: Mapping[Exponent, int] | None = None):
        self.field = _field(field)
        self.r = int(r)
        if self.r < 1:
            raise DomainError("a polynomial needs at least one variable")
        p = self.field.p
        clean: dict[Exponent, int] = {}
        for exp, c in (terms or {}).items():
            exp = check_exponent(exp, self.r)
            c = (clean.get(exp, 0) + int(c)) % p
            if c:
                clean[exp] = c
            else:
                clean.pop(exp, None)
        self._terms = clean

    @classmethod
    def zero(cls, field, r):
        return cls(field, r)

    @classmethod
    def constant(cls, field, r, c):
        return cls(field, r, {(0,) * r: c})

    @classmethod
    def one(cls, field, r):
        return cls.constant(field, r, 1)

    @classmethod
    def monomial(cls, field, exp, coef=1):
        exp = tuple(exp)
        return cls(field, len(exp), {exp: coef})

    @classmethod
    def variable(cls, field, r, i):
        """The variable X_{i+1} (0-based ``i``)."""
        return cls.monomial(field, tuple(int(j == i) for j in range(r)))

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        """(exponent, coefficient) pairs in psi order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]))

    def coeff(self, exp) -> int:
        return self._terms.get(tuple(exp), 0)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected a Polynomial, got {type(other).__name__}")
        if other.r != self.r:
            raise DomainError(f"variable count mismatch: {self.r} vs {other.r}")
        if other.field != self.field:
            raise DomainError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.field, self.r, other)
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.field, self.r, out)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.field, self.r, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> "Polynomial":
        return Polynomial(self.field, self.r, {e: c * v for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        p = self.field.p
        out: dict[Exponent, int] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = add(ea, eb)
                out[e] = (out.get(e, 0) + ca * cb) % p
        return Polynomial(self.field, self.r, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        out = Polynomial.one(self.field, self.r)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.field, self.r, self._terms) == (other.field, other.r, other._terms)

    __hash__ = None

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for exp, c in sorted(self.items(), key=lambda t: -sum(t[0])):
            mono = "*".join(
                f"X{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exp) if e
            )
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_scale(c: int, a: Polynomial) -> Polynomial:
    return a.scale(c)


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


class PolyVector:
    """A row vector in D^l."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence[Polynomial]):
        comps = tuple(components)
        if not comps:
            raise DomainError("a polynomial vector needs at least one component")
        for c in comps[1:]:
            comps[0]._check(c)
        self.components = comps

    @classmethod
    def zero(cls, field, r, l):
        return cls([Polynomial.zero(field, r)] * l)

    @classmethod
    def unit(cls, field, r, l, i):
        return cls([Polynomial.constant(field, r, int(j == i)) for j in range(l)])

    @property
    def field(self) -> GF:
        return self.components[0].field

    @property
    def r(self) -> int:
        return self.components[0].r

    @property
    def l(self) -> int:
        return len(self.components)

    @property
    def degree(self) -> int:
        return max(c.degree for c in self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def _check(self, other: "PolyVector"):
        if other.l != self.l:
            raise DomainError(f"vector length mismatch: {self.l} vs {other.l}")

    def __add__(self, other):
        self._check(other)
        return PolyVector([a + b for a, b in zip(self, other)])

    def __sub__(self, other):
        self._check(other)
        return PolyVector([a - b for a, b in zip(self, other)])

    def __neg__(self):
        return PolyVector([-a for a in self])

    def __mul__(self, other):
        """Scale by a field element or (on the left) by a polynomial."""
        if isinstance(other, int):
            return PolyVector([a.scale(other) for a in self])
        if isinstance(other, Polynomial):
            return PolyVector([other * a for a in self])
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, R: "PolyMatrix") -> "PolyVector":
        return vec_matrix_mul(self, R)

    def __eq__(self, other):
        if not isinstance(other, PolyVector):
            return NotImplemented
        return self.components == other.components

    __hash__ = None

    def __repr__(self):
        return "(" + ", ".join(repr(c) for c in self) + ")"


class PolyMatrix:
    """A k x l matrix over D, stored as k row vectors."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[PolyVector | Sequence[Polynomial]]):
        rows = tuple(r if isinstance(r, PolyVector) else PolyVector(r) for r in rows)
        if not rows:
            raise DomainError("a polynomial matrix needs at least one row")
        for row in rows[1:]:
            if row.l != rows[0].l:
                raise DomainError("ragged polynomial matrix")
            rows[0][0]._check(row[0])
        self.rows = rows

    @classmethod
    def identity(cls, field, r, n):
        return cls([PolyVector.unit(field, r, n, i) for i in range(n)])

    @classmethod
    def zero(cls, field, r, k, l):
        return cls([PolyVector.zero(field, r, l) for _ in range(k)])

    @property
    def field(self) -> GF:
        return self.rows[0].field

    @property
    def r(self) -> int:
        return self.rows[0].r

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def l(self) -> int:
        return self.rows[0].l

    @property
    def shape(self) -> tuple[int, int]:
        return self.k, self.l

    @property
    def degree(self) -> int:
        """Largest entry degree; -1 for the zero matrix."""
        return max(row.degree for row in self.rows)

    def row_degrees(self) -> list[int]:
        return [row.degree for row in self.rows]

    def entry(self, i, j) -> Polynomial:
        return self.rows[i][j]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix([[row[j] for row in self.rows] for j in range(self.l)])

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.rows == other.rows

    __hash__ = None

    def __repr__(self):
        return "[" + "; ".join(repr(r) for r in self.rows) + "]"


def vec_matrix_mul(c: PolyVector, R: PolyMatrix) -> PolyVector:
    """The row vector ``c . R`` for ``c`` in D^k and ``R`` in D^{k,l}."""
    if c.l != R.k:
        raise DomainError(f"cannot multiply a length-{c.l} row by a {R.k}x{R.l} matrix")
    out = []
    for j in range(R.l):
        acc = Polynomial.zero(R.field, R.r)
        for ci, row in zip(c, R.rows):
            acc = acc + ci * row[j]
        out.append(acc)
    return PolyVector(out)
