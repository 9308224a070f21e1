"""Polynomial operators in the shift, duality, and behaviors over GF(p)."""

from .behavior import (AutoregressiveSystem, BehaviorSlice, Verdict, is_member,
                       orthogonal_of_polys, orthogonal_of_series, quotient_pairing_check,
                       shift_invariance_check, solve_behavior, triple_perp_check)
from .errors import DadsError, DomainError, NotPrimeError, OutsideBallError, SchemaError
from .monomials import ball, psi, psi_inv, sub_checked, window
from .polysys import PolyMatrix, Polynomial, PolyVector, vec_matrix_mul
from .scalars import GF, nullspace, rank, rref
from .series import SeriesVector, TruncatedSeries, from_function, monomial_series
from .shiftop import apply_matrix, apply_poly, pairing_A, pairing_F, shift, shift_vector

__version__ = "0.1.0"
