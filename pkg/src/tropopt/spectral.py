"""Spectral radius and eigenvectors of matrices over a semifield."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InternalError
from .linalg import as_matrix, bounded_star, powers, scal_mul, trace
from .semifield import MAX_PLUS, get_semifield
from .structure import is_irreducible, normal_form

__all__ = ["SpectralResult", "spectral_radius", "eigenvalue", "eigenvector_irreducible"]


@dataclass(frozen=True)
class SpectralResult:
    """Spectral radius of a matrix together with the eigenvalues of its diagonal blocks.

    ``blocks`` holds one ``(block_index, eigenvalue, original_indices)`` tuple
    per diagonal block of the normal form, in normal-form order.
    """

    radius: float
    blocks: tuple


def eigenvalue(A, sf=MAX_PLUS):
    """``(+)_{m=1..n} tr(A^m)^(1/m)`` evaluated from explicit powers of ``A``."""
    sf = get_semifield(sf)
    A = np.asarray(A, dtype=float)
    roots = [sf.pow(trace(P, sf), 1.0 / m) for m, P in enumerate(powers(A, A.shape[0], sf), 1)]
    return float(sf.sum(roots))


def spectral_radius(A, sf=MAX_PLUS) -> SpectralResult:
    sf = get_semifield(sf)
    A = as_matrix(A, sf, square=True)
    nf = normal_form(A, sf)
    blocks = tuple(
        (i, eigenvalue(nf.diagonal_block(i), sf), tuple(int(k) for k in nf.original_indices(i)))
        for i in range(nf.n_blocks)
    )
    return SpectralResult(eigenvalue(A, sf), blocks)


def eigenvector_irreducible(A, lam=None, sf=MAX_PLUS, *, rtol=1e-9):
    """Regular eigenvector of an irreducible matrix.

    The eigenvector is a column ``j`` of ``(A/lam)*`` whose index lies on a
    critical cycle, i.e. ``(A/lam + ... + (A/lam)^n)_jj == 1``.
    """
    sf = get_semifield(sf)
    A = as_matrix(A, sf, square=True)
    if not is_irreducible(A, sf):
        raise DomainError("eigenvector_irreducible requires an irreducible matrix")
    radius = eigenvalue(A, sf)
    if lam is None:
        lam = radius
    elif not np.isclose(lam, radius, rtol=rtol, atol=rtol):
        raise DomainError(f"{lam} is not the eigenvalue {radius} of the matrix")
    if sf.is_zero(lam):
        raise DomainError("eigenvalue is zero")

    An = scal_mul(sf.inv(lam), A, sf)
    plus = powers(An, A.shape[0], sf)
    diag = sf.sum(np.stack([np.diag(P) for P in plus]), axis=0)
    crit = np.flatnonzero(np.isclose(diag, sf.one, rtol=rtol, atol=rtol))
    if crit.size == 0:
        raise InternalError("no critical node found for an irreducible matrix")
    x = bounded_star(An, sf)[:, crit[0]]
    if np.any(sf.is_zero(x)):
        raise InternalError("eigenvector of an irreducible matrix is not regular")
    return x
