"""
Behaviors of linear recurrences
===============================

The behavior Ker R of a polynomial matrix R is the set of multi-indexed
sequences W with R . W = 0. At a truncation bound D we compute an exact
basis of the sequences known up to degree D that satisfy every equation
the data determines.
"""

# %%
from math import comb

from dads import GF, PolyMatrix, Polynomial, is_member, shift_invariance_check, solve_behavior
from dads.scalars import solve

F = GF(101)
X = Polynomial.variable(F, 1, 0)

# %%
# Fibonacci: X^2 - X - 1 encodes w_{n+2} = w_{n+1} + w_n. Two initial values
# are free, so the slice has dimension 2.
fib = solve_behavior(PolyMatrix([[X ** 2 - X - 1]]), 10)
print("dim", fib.dim)

# %%
# Pick the solution with w0 = 0, w1 = 1 out of the basis.
B = fib.matrix()
coef = solve(B[:, :2].T, [0, 1], F.p)
print((coef @ B % F.p).tolist())

# %%
# Behaviors are shift invariant: dropping the first term of a solution
# gives another solution.
print(shift_invariance_check(fib))

# %%
# In two variables X1 X2 - X1 - X2 is Pascal's rule
# w_{i+1,j+1} = w_{i+1,j} + w_{i,j+1}. The boundary values w_{i,0}, w_{0,j}
# are free, giving 2D + 1 dimensions at bound D.
X1, X2 = Polynomial.variable(F, 2, 0), Polynomial.variable(F, 2, 1)
pascal_op = PolyMatrix([[X1 * X2 - X1 - X2]])
for D in range(2, 7):
    print(D, solve_behavior(pascal_op, D).dim)

# %%
# Binomial coefficients satisfy it, up to the checked degree.
from dads import SeriesVector, from_function

binomials = SeriesVector([from_function(F, 2, lambda a: comb(a[0] + a[1], a[0]), 8)])
print(is_member(pascal_op, binomials))

# %%
# A coupled system in two components: the first-index differences of w1 are
# the second-index shifts of w2, and w2 obeys w_{i,j+2} = 2 w_{i,j}.
F5 = GF(5)
Y1, Y2 = Polynomial.variable(F5, 2, 0), Polynomial.variable(F5, 2, 1)
R = PolyMatrix([[Y1 - 1, -Y2], [Polynomial.zero(F5, 2), Y2 ** 2 - 2]])
slc = solve_behavior(R, 5)
print("dim", slc.dim, slc.certify())
