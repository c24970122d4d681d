"""
A closed-form tropical extremal problem
=======================================

We minimize

    F(x) = x^- A x  (+)  x^- p  (+)  q^- x

over regular vectors ``x``. In max-plus terms this is

    max( max_ij (a_ij + x_j - x_i),  max_i (p_i - x_i),  max_i (x_i - q_i) ),

a worst-case "deviation" objective. The solver returns the minimum ``mu``
and every minimizer as ``x = B u`` with ``u`` in a box. Here the answer is
checked against a brute-force grid.
"""

import numpy as np

import tropopt as tp
from tropopt.oracle import GridSpec, evaluate_objective, grid_minimize

inf = np.inf

A = np.array([
    [-inf, 1.0, -inf],
    [-2.0, -inf, 0.5],
    [0.0, -inf, -inf],
])
p = np.array([1.0, -inf, 0.0])
q = np.array([2.0, 3.0, 1.0])
P = tp.Problem(A, p, q)

S = tp.solve(P)
print(f"mu = {S.mu:.4f}  (lambda = {S.lam:.4f}, delta = {S.delta:.4f}, "
      f"coupling = {S.coupling:.4f})")
print("B =\n", S.B.round(4))
print("box: lower =", S.lower.round(4), " upper =", S.upper.round(4))

###############################################################################
# Any ``u`` inside the box yields a minimizer. A zero lower bound means the
# coordinate is unbounded below; we clip it for sampling.

rng = np.random.default_rng(1)
lo = np.maximum(S.lower, S.upper - 3.0)
for _ in range(3):
    u = lo + (S.upper - lo) * rng.random(3)
    x = tp.sample_minimizer(S, u)
    print("x =", x.round(4), " F(x) =", round(tp.objective(P, x), 10))

###############################################################################
# Brute force over a grid agrees up to the grid step.

value, argmin = grid_minimize(P, GridSpec(-5, 5, 0.05, 3))
print(f"grid minimum {value:.4f} at {argmin}")

###############################################################################
# ``lambda (+) delta`` alone is a lower bound that need not be attained. In
# the instance below it equals -10, but the path from ``p`` through ``A`` to
# ``q`` forces the minimum up to 10/3. The solver accounts for such paths in
# the ``coupling`` term.

P2 = tp.Problem([[-inf, -30.0], [10.0, -inf]], [0.0, -inf], [100.0, 0.0])
S2 = tp.solve(P2)
print(f"lambda (+) delta = {max(S2.lam, S2.delta)}, mu = {S2.mu:.6f}")
xs = np.stack(np.meshgrid(np.linspace(-20, 20, 801), np.linspace(-20, 20, 801)), -1)
print("grid minimum:", evaluate_objective(P2, xs.reshape(-1, 2)).min().round(4))

###############################################################################
# The same problem in min-plus is the mirror image: negate everything.

S3 = tp.solve(tp.Problem(-A, -p, -q, "min-plus"))
print("min-plus mu =", round(S3.mu, 10), " (= -max-plus mu)")
