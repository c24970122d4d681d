"""Closed-form solutions of one-sided linear inequalities.

* :func:`solve_upper` -- all ``x`` with ``A x <= d``, via residuation
  ``x <= (d^- A)^-``.
* :func:`solve_fixed` -- all regular ``x`` with ``A x + b <= x``, as the
  image ``x = (D*T)* D* u`` of regular ``u >= b``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DomainError, NoRegularSolution
from .linalg import as_matrix, as_vector, bounded_star, conjugate, mat_mul, tr_func, zero_columns
from .semifield import MAX_PLUS, Semifield, get_semifield
from .structure import dt_split, normal_form

__all__ = ["UpperSolution", "ConeSolution", "solve_upper", "solve_fixed", "kleene_generator"]


@dataclass(frozen=True)
class UpperSolution:
    """Greatest solution of ``A x <= d``.

    ``bound[i]`` is the largest admissible ``x_i``; indices in ``free`` belong
    to zero columns of ``A`` and are unconstrained (their ``bound`` entry is
    NaN).
    """

    bound: np.ndarray
    free: tuple
    semifield: Semifield = MAX_PLUS

    def contains(self, x, rtol=1e-9, atol=1e-9) -> bool:
        sf = self.semifield
        mask = ~np.isnan(self.bound)
        return bool(np.all(sf.leq_approx(np.asarray(x)[mask], self.bound[mask], rtol, atol)))


@dataclass(frozen=True)
class ConeSolution:
    """Regular solutions ``x = generator (x) u`` for every regular ``u >= lower``."""

    generator: np.ndarray
    lower: np.ndarray
    semifield: Semifield = MAX_PLUS

    def point(self, u):
        sf = self.semifield
        u = as_vector(u, sf, size=self.lower.size, name="u")
        if np.any(sf.is_zero(u)):
            raise DomainError("u must be regular")
        if not np.all(sf.leq_approx(self.lower, u)):
            raise DomainError("u must satisfy u >= lower")
        return mat_mul(self.generator, u, sf)


def solve_upper(A, d, sf=MAX_PLUS) -> UpperSolution:
    """Solve ``A x <= d`` for a regular right-hand side ``d``."""
    sf = get_semifield(sf)
    A = as_matrix(A, sf, name="A")
    d = as_vector(d, sf, size=A.shape[0], name="d")
    if np.any(sf.is_zero(d)):
        raise DomainError("right-hand side d must be regular")
    free = zero_columns(A, sf)
    bound = np.full(A.shape[1], np.nan)
    keep = np.setdiff1d(np.arange(A.shape[1]), free)
    if keep.size:
        row = mat_mul(conjugate(d, sf), A[:, keep], sf)
        bound[keep] = sf.pseudo_inv(row)
    return UpperSolution(bound, tuple(int(i) for i in free), sf)


def kleene_generator(A, sf=MAX_PLUS):
    """``(D*T)* D*`` for the normal-form split ``A = D + T``, in original coordinates."""
    sf = get_semifield(sf)
    nf = normal_form(A, sf)
    dt = dt_split(nf)
    Ds = bounded_star(dt.D, sf)
    G = mat_mul(bounded_star(mat_mul(Ds, dt.T, sf), sf), Ds, sf)
    return nf.to_original(G)


def solve_fixed(A, b, sf=MAX_PLUS) -> ConeSolution:
    """All regular solutions of ``A x + b <= x``.

    Raises
    ------
    NoRegularSolution
        If ``Tr(A) > 1``, i.e. the digraph of ``A`` has a cycle heavier than one.
    """
    sf = get_semifield(sf)
    A = as_matrix(A, sf, square=True, name="A")
    b = as_vector(b, sf, name="b")
    if b.size != A.shape[0]:
        raise DimensionError(f"b has length {b.size}, expected {A.shape[0]}")
    tr = tr_func(A, sf)
    if sf.lt(sf.one, tr):
        raise NoRegularSolution(f"Tr(A) = {float(tr)} exceeds the identity {sf.one}")
    return ConeSolution(kleene_generator(A, sf), b.copy(), sf)
