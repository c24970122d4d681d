"""Brute-force verifiers for the closed-form routines.

Nothing here calls into :mod:`tropopt.linalg`, :mod:`tropopt.spectral` or
:mod:`tropopt.solver`; the arithmetic is written out directly with numpy so
that agreement between the two routes means something.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import CostGuard, DomainError
from .semifield import get_semifield

__all__ = [
    "GridSpec",
    "grid_minimize",
    "evaluate_objective",
    "grid_fixed_solutions",
    "cycle_mean_radius",
    "elementary_cycles",
    "MAX_GRID_POINTS",
    "MAX_CYCLE_ORDER",
]

MAX_GRID_POINTS = 10**7
MAX_CYCLE_ORDER = 8


@dataclass(frozen=True)
class GridSpec:
    """Regular grid ``lo, lo + step, ..., <= hi`` along each of ``dims`` axes."""

    lo: float
    hi: float
    step: float
    dims: int

    def __post_init__(self):
        if not (self.hi >= self.lo):
            raise DomainError(f"grid needs lo <= hi, got {self.lo} > {self.hi}")
        if not self.step > 0:
            raise DomainError(f"grid step must be positive, got {self.step}")
        if not 1 <= self.dims <= 4:
            raise CostGuard(f"grid dimension {self.dims} outside 1..4")
        if self.n_points > MAX_GRID_POINTS:
            raise CostGuard(f"grid has {self.n_points} points, limit is {MAX_GRID_POINTS}")

    @property
    def axis(self):
        k = int(math.floor((self.hi - self.lo) / self.step + 1e-9)) + 1
        return self.lo + self.step * np.arange(k)

    @property
    def n_points(self) -> int:
        k = int(math.floor((self.hi - self.lo) / self.step + 1e-9)) + 1
        return k**self.dims

    def chunks(self):
        """Yield grid points as ``(m, dims)`` arrays in lexicographic order.

        The trailing (up to two) axes form a fixed mesh; the leading axes are
        walked one combination at a time.
        """
        axis = self.axis
        tail = min(self.dims, 2)
        mesh = np.stack([m.ravel() for m in np.meshgrid(*([axis] * tail), indexing="ij")], axis=1)
        for head in itertools.product(axis, repeat=self.dims - tail):
            lead = np.broadcast_to(np.asarray(head, dtype=float), (mesh.shape[0], len(head)))
            yield np.concatenate([lead, mesh], axis=1)


def _additive_tag(tag):
    sf = get_semifield(tag)
    if sf.multiplicative:
        raise DomainError("grid oracles work over max-plus or min-plus only")
    return sf


def evaluate_objective(problem, X):
    """Objective of ``problem`` at each row of ``X`` (plus semifields only)."""
    sf = _additive_tag(problem.semifield)
    X = np.atleast_2d(np.asarray(X, dtype=float))
    A = np.asarray(problem.A, dtype=float)
    return _objective_batch(A, np.asarray(problem.p, float), np.asarray(problem.q, float),
                            X, sf.maximizing, sf.zero)


def _objective_batch(A, p, q, X, maximizing, zero):
    better = np.maximum if maximizing else np.minimum
    cols = np.ascontiguousarray(X.T)
    acc = np.full(X.shape[0], zero)
    n = A.shape[0]
    for i in range(n):
        for j in range(n):
            if A[i, j] != zero:
                better(acc, A[i, j] + cols[j] - cols[i], out=acc)
        if p[i] != zero:
            better(acc, p[i] - cols[i], out=acc)
        if q[i] != zero:
            better(acc, cols[i] - q[i], out=acc)
    return acc


def grid_minimize(problem, grid: GridSpec):
    """Exhaustive minimum of the objective of ``problem`` over ``grid``.

    Minimum is taken in the semifield order (numeric maximum for min-plus).
    Returns ``(value, argmin)``; ties go to the lexicographically first point.
    """
    sf = _additive_tag(problem.semifield)
    A = np.asarray(problem.A, dtype=float)
    p = np.asarray(problem.p, dtype=float)
    q = np.asarray(problem.q, dtype=float)
    if grid.dims != A.shape[0]:
        raise DomainError(f"grid has {grid.dims} dims, problem has {A.shape[0]}")

    best_val, best_x = None, None
    for X in grid.chunks():
        vals = _objective_batch(A, p, q, X, sf.maximizing, sf.zero)
        k = int(np.argmin(vals) if sf.maximizing else np.argmax(vals))
        v = vals[k]
        better = best_val is None or (v < best_val if sf.maximizing else v > best_val)
        if better:
            best_val, best_x = float(v), X[k].copy()
    return best_val, best_x


def grid_fixed_solutions(A, b, grid: GridSpec, tag="max-plus"):
    """All grid points ``x`` with ``A x + b <= x`` (semifield operations)."""
    sf = _additive_tag(tag)
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    reduce = np.max if sf.maximizing else np.min
    found = []
    for X in grid.chunks():
        with np.errstate(invalid="ignore"):
            ax = reduce(A[None, :, :] + X[:, None, :], axis=2)
        lhs = reduce(np.stack([ax, np.broadcast_to(b, ax.shape)]), axis=0)
        ok = np.all(lhs <= X, axis=1) if sf.maximizing else np.all(lhs >= X, axis=1)
        found.append(X[ok])
    return np.concatenate(found) if found else np.empty((0, grid.dims))


def elementary_cycles(adjacency):
    """All elementary cycles of a digraph given as a boolean matrix.

    Each cycle is reported once, starting from its smallest node.
    """
    adj = np.asarray(adjacency, dtype=bool)
    n = adj.shape[0]
    out = []

    def extend(root, path, on_path):
        last = path[-1]
        for nxt in np.flatnonzero(adj[last]):
            nxt = int(nxt)
            if nxt == root:
                out.append(list(path))
            elif nxt > root and nxt not in on_path:
                path.append(nxt)
                on_path.add(nxt)
                extend(root, path, on_path)
                on_path.discard(nxt)
                path.pop()

    for root in range(n):
        extend(root, [root], {root})
    return out


def cycle_mean_radius(A, tag="max-plus"):
    """Best cycle mean of ``A``, found by enumerating every elementary cycle.

    For plus semifields the mean of a cycle is its total weight divided by
    its length; for times semifields it is the geometric mean.
    """
    sf = get_semifield(tag)
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    if n > MAX_CYCLE_ORDER:
        raise CostGuard(f"cycle enumeration limited to order {MAX_CYCLE_ORDER}, got {n}")
    best = sf.zero
    for cyc in elementary_cycles(A != sf.zero):
        w = [A[i, j] for i, j in zip(cyc, cyc[1:] + cyc[:1])]
        m = len(w)
        mean = math.prod(w) ** (1.0 / m) if sf.multiplicative else math.fsum(w) / m
        best = max(best, mean) if sf.maximizing else min(best, mean)
    return float(best)
