"""
Solving tropical linear inequalities
====================================

Two inequalities recur in tropical optimization:

* ``A x <= d``: its solutions are all ``x`` below a single greatest one,
  obtained by residuation.
* ``A x (+) b <= x``: its regular solutions form a cone ``x = G u`` with
  ``u >= b``, provided no cycle of ``A`` has positive weight.
"""

import numpy as np

import tropopt as tp

inf = np.inf

###############################################################################
# Greatest solution of ``A x <= d``. Columns of ``A`` that are entirely zero
# impose no constraint; those coordinates come back as ``nan`` and are listed
# in ``free``.

A = np.array([[0.0, 1.0, -inf], [2.0, 0.0, -inf]])
d = np.array([0.0, 0.0])
up = tp.solve_upper(A, d)
print("bound:", up.bound, "free:", up.free)

x = np.where(np.isnan(up.bound), 100.0, up.bound)
print("A x =", tp.mat_mul(A, x), "<= d =", d)

# nudging a bounded coordinate upwards breaks the inequality
y = x.copy()
y[0] += 0.01
print("after nudging x0:", tp.mat_mul(A, y))

###############################################################################
# The cone ``A x (+) b <= x``. Here the only cycle has weight -2, so
# ``Tr(A) = -2 <= 0`` and the generator is the Kleene star of ``A``.

A = np.array([[-inf, -1.0], [-1.0, -inf]])
b = np.array([0.0, -3.0])
print("Tr(A) =", tp.tr_func(A))
cone = tp.solve_fixed(A, b)
print("generator:\n", cone.generator)

rng = np.random.default_rng(0)
for _ in range(3):
    u = np.maximum(b, rng.uniform(-2, 2, size=2))
    x = cone.point(u)
    lhs = np.maximum(tp.mat_mul(A, x), b)
    print(f"u={u.round(3)} -> x={x.round(3)}, A x (+) b = {lhs.round(3)}")

###############################################################################
# A positive cycle leaves no regular solution at all.

try:
    tp.solve_fixed([[0.5]], [0.0])
except tp.NoRegularSolution as exc:
    print("no regular solution:", exc)
