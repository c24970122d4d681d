"""Dense vectors and matrices over an idempotent semifield.

Vectors are 1-D float arrays, matrices 2-D float arrays. Every function takes
the semifield as ``sf`` (a :class:`~tropopt.semifield.Semifield` or a tag
string) and defaults to max-plus.

Products accept any mix of 1-D and 2-D operands: a 1-D left operand is a
row vector, a 1-D right operand a column vector, so ``mat_mul(x, y)`` is the
scalar product and ``mat_mul(A, x)`` the usual matrix-vector product.
"""
from __future__ import annotations

import numpy as np

from .errors import DimensionError, DomainError
from .semifield import MAX_PLUS, get_semifield

__all__ = [
    "as_matrix",
    "as_vector",
    "zeros",
    "identity",
    "mat_add",
    "mat_mul",
    "scal_mul",
    "mat_power",
    "powers",
    "conjugate",
    "is_regular",
    "zero_columns",
    "zero_rows",
    "is_column_regular",
    "is_row_regular",
    "trace",
    "bounded_star",
    "tr_func",
]


def as_matrix(A, sf=MAX_PLUS, *, square=False, name="matrix"):
    sf = get_semifield(sf)
    A = sf.validate(A, name)
    if A.ndim != 2 or 0 in A.shape:
        raise DimensionError(f"{name} must be a non-empty 2-D array, got shape {A.shape}")
    if square and A.shape[0] != A.shape[1]:
        raise DimensionError(f"{name} must be square, got shape {A.shape}")
    return A


def as_vector(x, sf=MAX_PLUS, *, size=None, name="vector"):
    sf = get_semifield(sf)
    x = sf.validate(x, name)
    if x.ndim != 1 or x.size == 0:
        raise DimensionError(f"{name} must be a non-empty 1-D array, got shape {x.shape}")
    if size is not None and x.size != size:
        raise DimensionError(f"{name} has length {x.size}, expected {size}")
    return x


def zeros(shape, sf=MAX_PLUS):
    return np.full(shape, get_semifield(sf).zero)


def identity(n, sf=MAX_PLUS):
    sf = get_semifield(sf)
    out = np.full((n, n), sf.zero)
    np.fill_diagonal(out, sf.one)
    return out


def mat_add(A, B, sf=MAX_PLUS):
    sf = get_semifield(sf)
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    if A.shape != B.shape:
        raise DimensionError(f"cannot add shapes {A.shape} and {B.shape}")
    return sf.add(A, B)


def mat_mul(A, B, sf=MAX_PLUS):
    """Semifield product ``(AB)_ij = (+)_k a_ik (x) b_kj``."""
    sf = get_semifield(sf)
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    if A.ndim not in (1, 2) or B.ndim not in (1, 2):
        raise DimensionError("operands must be 1-D or 2-D")
    inner_a = A.shape[-1]
    inner_b = B.shape[0]
    if inner_a != inner_b:
        raise DimensionError(f"cannot multiply shapes {A.shape} and {B.shape}")
    A2 = A if A.ndim == 2 else A[None, :]
    B2 = B if B.ndim == 2 else B[:, None]
    prod = sf.sum(sf.mul(A2[:, :, None], B2[None, :, :]), axis=1)
    if A.ndim == 1:
        prod = prod[0]
    if B.ndim == 1:
        prod = prod[..., 0]
    return prod[()] if np.ndim(prod) == 0 else prod


def scal_mul(c, A, sf=MAX_PLUS):
    return get_semifield(sf).mul(c, np.asarray(A, dtype=float))


def powers(A, m, sf=MAX_PLUS):
    """List ``[A^1, ..., A^m]`` computed by repeated multiplication."""
    A = np.asarray(A, dtype=float)
    out = []
    P = A
    for k in range(m):
        if k:
            P = mat_mul(P, A, sf)
        out.append(P)
    return out


def mat_power(A, m, sf=MAX_PLUS):
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionError(f"matrix power needs a square matrix, got {A.shape}")
    if m == 0:
        return identity(A.shape[0], sf)
    return powers(A, m, sf)[-1]


def conjugate(x, sf=MAX_PLUS):
    """Conjugate row vector ``x^-``: inverse of each nonzero entry, zero kept.

    Raises DomainError on the zero vector, for which ``x^-`` is undefined.
    """
    sf = get_semifield(sf)
    x = np.asarray(x, dtype=float)
    if np.all(sf.is_zero(x)):
        raise DomainError("conjugate of the zero vector is undefined")
    return sf.pseudo_inv(x)


def is_regular(x, sf=MAX_PLUS) -> bool:
    return not bool(np.any(get_semifield(sf).is_zero(x)))


def zero_columns(A, sf=MAX_PLUS):
    return np.flatnonzero(np.all(get_semifield(sf).is_zero(A), axis=0))


def zero_rows(A, sf=MAX_PLUS):
    return np.flatnonzero(np.all(get_semifield(sf).is_zero(A), axis=1))


def is_column_regular(A, sf=MAX_PLUS) -> bool:
    return zero_columns(A, sf).size == 0


def is_row_regular(A, sf=MAX_PLUS) -> bool:
    return zero_rows(A, sf).size == 0


def _check_square(A):
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {A.shape}")
    return A


def trace(A, sf=MAX_PLUS):
    A = _check_square(A)
    return get_semifield(sf).sum(np.diag(A))


def bounded_star(A, sf=MAX_PLUS):
    """``A* = I + A + ... + A^(n-1)`` for an ``n x n`` matrix."""
    sf = get_semifield(sf)
    A = _check_square(A)
    n = A.shape[0]
    S = identity(n, sf)
    for P in powers(A, n - 1, sf):
        S = sf.add(S, P)
    return S


def tr_func(A, sf=MAX_PLUS):
    """``Tr(A) = tr A + tr A^2 + ... + tr A^n``; ``Tr(A) <= 1`` iff ``A`` has no cycle heavier than one."""
    sf = get_semifield(sf)
    A = _check_square(A)
    traces = [trace(P, sf) for P in powers(A, A.shape[0], sf)]
    return sf.sum(traces)
