"""
Orthogonals and the double orthogonal
=====================================

For a set P of polynomial vectors, P-perp is the behavior of the matrix with
rows P. For a set Q of series, Q-perp is the set of polynomial vectors that
annihilate every member of Q. Taking orthogonals three times gives back the
first orthogonal.
"""

# %%
import numpy as np

from dads import GF, PolyVector, Polynomial, orthogonal_of_polys, orthogonal_of_series, triple_perp_check
from dads.behavior import quotient_pairing_check
from dads.laws import random_generators

F = GF(7)
X = Polynomial.variable(F, 1, 0)

# %%
# {X - 1}-perp is the constant sequences. Adding X^2 - 1, which is a
# multiple of X - 1, does not change it.
S = orthogonal_of_polys([PolyVector([X - 1])], 6)
S2 = orthogonal_of_polys([PolyVector([X - 1]), PolyVector([X ** 2 - 1])], 6)
print(S.dim, S2.dim, S.same_span(S2))

# %%
# Going back: the polynomials of degree <= 3 that kill the constants are
# exactly those vanishing at 1, a 3-dimensional space containing X - 1.
Q = orthogonal_of_series(S.basis, 3)
print(Q)

# %%
# Triple orthogonal on random generator sets over GF(5).
F5 = GF(5)
for t in range(5):
    P = random_generators(np.random.default_rng(t), F5)
    print(P, triple_perp_check(P, 8, 4))

# %%
# The pairing of D^l / <P> with P-perp is well defined: anything in the
# module generated by P pairs to zero with every element of P-perp.
print(quotient_pairing_check([PolyVector([X ** 2 - X - 1])], 8, trials=10))
