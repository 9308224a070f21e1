"""
Shifts, the polynomial operator in the shift, and duality
==========================================================

A polynomial ``d`` acts on a power series ``W`` by

    (d . W)_a = sum_b d_b W_{a+b}

and this action is the adjoint of multiplying polynomials by ``d``.
"""

# %%
# Work over GF(7) in two variables. A series is only known on a
# total-degree ball; here Y1^2 Y2 is known up to degree 4.
from dads import GF, Polynomial, apply_poly, from_function, monomial_series, pairing_F, shift

F = GF(7)
W = monomial_series(F, (2, 1), 4)
print(W)

# %%
# Shifting by X1 lowers the exponent, and shifting past it gives zero.
# Every shift by a degree-k monomial costs k degrees of knowledge.
print(shift((1, 0), W))
print(shift((2, 0), monomial_series(F, (1, 1), 4)))

# %%
# The operator X - 1 annihilates the constant sequence: w_{n+1} - w_n = 0.
X = Polynomial.variable(F, 1, 0)
ones = from_function(F, 1, lambda a: 1, 6)
print(apply_poly(X - 1, ones))

# %%
# Adjointness: <c*d, W> == <c, d . W> for the pairing sum_a c_a W_a.
X1, X2 = Polynomial.variable(F, 2, 0), Polynomial.variable(F, 2, 1)
c = 3 * X1 * X2 + X2 + 2
d = X1 ** 2 - 4 * X2
W = from_function(F, 2, lambda a: (a[0] + 2 * a[1]) ** 3, 8)
print(pairing_F(c * d, W), pairing_F(c, apply_poly(d, W)))

# %%
# The module axiom (d*e) . W == d . (e . W) holds exactly.
e = X2 + 5
print(apply_poly(d * e, W) == apply_poly(d, apply_poly(e, W)))
