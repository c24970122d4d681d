"""Reducibility analysis and the block lower-triangular normal form.

The digraph of a square matrix ``A`` has an arc ``i -> j`` whenever
``a_ij`` is nonzero. Its strongly connected components become the diagonal
blocks of the normal form. Components are placed so that every arc leaving a
block points to a block at or above it, which makes the permuted matrix block
lower triangular.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .linalg import as_matrix
from .semifield import MAX_PLUS, Semifield, get_semifield

__all__ = ["NormalForm", "DTDecomposition", "normal_form", "is_irreducible", "dt_split"]


@dataclass(frozen=True)
class NormalForm:
    """A matrix brought to block lower-triangular form.

    ``permuted == original[np.ix_(permutation, permutation)]``, i.e.
    ``permutation[k]`` is the original index placed at position ``k``.
    """

    permutation: np.ndarray
    block_sizes: tuple
    permuted: np.ndarray
    semifield: Semifield = MAX_PLUS

    @property
    def n_blocks(self) -> int:
        return len(self.block_sizes)

    @property
    def block_slices(self):
        edges = np.concatenate([[0], np.cumsum(self.block_sizes)])
        return [slice(int(a), int(b)) for a, b in zip(edges[:-1], edges[1:])]

    def diagonal_block(self, i):
        s = self.block_slices[i]
        return self.permuted[s, s]

    def original_indices(self, i):
        """Original row/column indices that make up block ``i``."""
        return self.permutation[self.block_slices[i]]

    def to_original(self, M):
        """Undo the permutation on a matrix (2-D) or vector (1-D) in permuted order."""
        M = np.asarray(M)
        inv = np.argsort(self.permutation)
        if M.ndim == 1:
            return M[inv]
        return M[np.ix_(inv, inv)]

    def to_dict(self):
        return {
            "permutation": [int(i) for i in self.permutation],
            "block_sizes": [int(s) for s in self.block_sizes],
        }


@dataclass(frozen=True)
class DTDecomposition:
    D: np.ndarray
    T: np.ndarray


def _components(A, sf):
    adj = csr_matrix(~sf.is_zero(A))
    ncomp, labels = connected_components(adj, directed=True, connection="strong")
    return ncomp, labels


def normal_form(A, sf=MAX_PLUS) -> NormalForm:
    """Permute ``A`` into block lower-triangular normal form.

    Blocks are strongly connected components of the digraph of ``A``, ordered
    so that a component comes after every component it has arcs into. Among
    the components ready to be placed the one holding the smallest original
    index goes first, and indices within a block stay in ascending order.
    """
    sf = get_semifield(sf)
    A = as_matrix(A, sf, square=True)
    ncomp, labels = _components(A, sf)
    members = [np.flatnonzero(labels == c) for c in range(ncomp)]

    # out-arcs between distinct components
    src, dst = np.nonzero(~sf.is_zero(A))
    succ = [set() for _ in range(ncomp)]
    for i, j in zip(labels[src], labels[dst]):
        if i != j:
            succ[i].add(j)
    pred = [set() for _ in range(ncomp)]
    for c, targets in enumerate(succ):
        for t in targets:
            pred[t].add(c)

    pending = [len(s) for s in succ]
    ready = [(int(members[c][0]), c) for c in range(ncomp) if pending[c] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        _, c = heapq.heappop(ready)
        order.append(c)
        for p in pred[c]:
            pending[p] -= 1
            if pending[p] == 0:
                heapq.heappush(ready, (int(members[p][0]), p))

    perm = np.concatenate([members[c] for c in order])
    sizes = tuple(int(members[c].size) for c in order)
    return NormalForm(perm, sizes, A[np.ix_(perm, perm)], sf)


def is_irreducible(A, sf=MAX_PLUS) -> bool:
    """True iff the digraph of ``A`` is strongly connected.

    A 1x1 matrix counts as irreducible only when its entry is nonzero.
    """
    sf = get_semifield(sf)
    A = as_matrix(A, sf, square=True)
    if A.shape[0] == 1:
        return not bool(sf.is_zero(A[0, 0]))
    return _components(A, sf)[0] == 1


def dt_split(nf: NormalForm) -> DTDecomposition:
    """Split the permuted matrix into block-diagonal ``D`` and strictly lower ``T``."""
    sf = nf.semifield
    M = nf.permuted
    D = np.full_like(M, sf.zero)
    for s in nf.block_slices:
        D[s, s] = M[s, s]
    T = M.copy()
    for s in nf.block_slices:
        T[s, s] = sf.zero
    return DTDecomposition(D, T)
