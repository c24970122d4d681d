"""
Tropical arithmetic and spectral radius
=======================================

In max-plus arithmetic "addition" is ``max`` and "multiplication" is ``+``.
The zero element is ``-inf`` and the unit is ``0``. This script walks through
the basic objects: scalars, matrix products, the normal form of a reducible
matrix, and its spectral radius.
"""

import numpy as np

import tropopt as tp

inf = np.inf
sf = tp.MAX_PLUS

# scalar operations
print("2 (+) 5 =", sf.add(2.0, 5.0))
print("2 (x) 5 =", sf.mul(2.0, 5.0))
print("5 ^ (1/2) =", sf.pow(5.0, 0.5))
print("inverse of 3 =", sf.inv(3.0))

# the same numbers in min-plus
print("min-plus 2 (+) 5 =", tp.MIN_PLUS.add(2.0, 5.0))

###############################################################################
# Matrix products follow the usual row-by-column rule, with max and +.

A = np.array([[-inf, 1.0], [2.0, -inf]])
print("A (x) A =\n", tp.mat_mul(A, A))

###############################################################################
# The only cycle of ``A`` is 0 -> 1 -> 0 with total weight 3 over two arcs,
# so the spectral radius (the best cycle mean) is 1.5.

lam = tp.spectral_radius(A).radius
x = tp.eigenvector_irreducible(A, lam)
print("lambda =", lam)
print("eigenvector x =", x)
print("A x - x =", tp.mat_mul(A, x) - x)

###############################################################################
# A reducible matrix is permuted into block lower-triangular form. Each
# diagonal block is a strongly connected component, and the spectral radius
# is the best of the block eigenvalues.

R = np.array([
    [0.5, -inf, -inf, -inf],
    [3.0, -inf, 1.0, -inf],
    [-inf, -1.0, -inf, -inf],
    [-inf, 2.0, -inf, -2.0],
])
nf = tp.normal_form(R)
print("permutation:", nf.permutation, "block sizes:", nf.block_sizes)
print("permuted matrix:\n", nf.permuted)

res = tp.spectral_radius(R)
for block, value, idx in res.blocks:
    print(f"block {block} on indices {list(idx)}: eigenvalue {value}")
print("spectral radius:", res.radius)

###############################################################################
# The bounded Kleene star collects the best path weights of length < n.
# It is finite exactly on pairs joined by a path.

print("star of R - 1:\n", tp.bounded_star(tp.scal_mul(-1.0, R)))
