"""Closed-form solution of the unconstrained tropical extremal problem

    minimize  x^- A x  (+)  x^- p  (+)  q^- x     over regular x.

The optimal value is

    mu = lam (+) (+)_{k=0..n-1} (q^- A^k p)^(1/(k+2)),

where ``lam`` is the spectral radius of ``A``. The ``k = 0`` term is
``delta = (q^- p)^(1/2)``. With ``B = (D*T)* D*`` built from the normal-form
split of ``A/mu``, the minimizers are exactly ``x = B u`` for regular ``u``
satisfying

    p/mu <= u,    u_J <= mu (q^- B)_J^-,    J = supp(q^- B).

The ``k >= 1`` terms of ``mu`` are what keep that box nonempty. Without them
``lam (+) delta`` is only a lower bound, which some instances do not attain.
In max-plus, ``A = [[-inf, -30], [10, -inf]]``, ``p = (0, -inf)``,
``q = (100, 0)`` has ``lam (+) delta = -10`` but minimum ``10/3``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, DomainError, IllPosed, InternalError
from .inequalities import kleene_generator
from .linalg import as_matrix, as_vector, bounded_star, conjugate, mat_mul, scal_mul, tr_func
from .semifield import MAX_PLUS, Semifield, get_semifield
from .spectral import spectral_radius
from .structure import is_irreducible, normal_form

__all__ = [
    "Problem",
    "SolutionSet",
    "objective",
    "solve",
    "sample_minimizer",
    "is_minimizer",
]

# round-off allowance for postcondition checks inside solve()
_RTOL = 1e-9


@dataclass(frozen=True)
class Problem:
    """Problem data ``(A, p, q)`` over one semifield."""

    A: np.ndarray
    p: np.ndarray
    q: np.ndarray
    semifield: Semifield = MAX_PLUS

    def __post_init__(self):
        sf = get_semifield(self.semifield)
        A = as_matrix(self.A, sf, square=True, name="A")
        n = A.shape[0]
        object.__setattr__(self, "semifield", sf)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "p", as_vector(self.p, sf, size=n, name="p"))
        object.__setattr__(self, "q", as_vector(self.q, sf, size=n, name="q"))

    @property
    def n(self) -> int:
        return self.A.shape[0]

    def objective(self, x):
        return objective(self, x)


@dataclass(frozen=True)
class SolutionSet:
    """Optimal value and the parametrization of all minimizers.

    Attributes
    ----------
    mu : float
        Minimum of the objective.
    lam : float
        Spectral radius of ``A``.
    delta : float
        ``(q^- p)^(1/2)``.
    coupling : float
        ``(+)_{k=1..n-1} (q^- A^k p)^(1/(k+2))``; zero when ``n == 1``.
    B : ndarray
        Generator matrix; minimizers are ``B u``.
    lower : ndarray
        ``p / mu``, lower bound on ``u`` (entries may be zero).
    upper : ndarray
        ``mu (q^- B)^-`` on ``upper_support``, NaN elsewhere (no bound).
    upper_support : tuple of int
        Support ``J`` of the row vector ``q^- B``.
    """

    mu: float
    lam: float
    delta: float
    coupling: float
    B: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    upper_support: tuple
    semifield: Semifield = MAX_PLUS
    irreducible: bool = False
    permutation: np.ndarray = field(default=None, repr=False)
    block_sizes: tuple = ()

    def in_box(self, u, rtol=1e-9, atol=1e-9) -> bool:
        sf = self.semifield
        u = np.asarray(u, dtype=float)
        if np.any(sf.is_zero(u)):
            return False
        if not np.all(sf.leq_approx(self.lower, u, rtol, atol)):
            return False
        J = list(self.upper_support)
        return bool(np.all(sf.leq_approx(u[J], self.upper[J], rtol, atol)))

    def sample(self, u):
        return sample_minimizer(self, u)


def objective(P: Problem, x):
    """``x^- A x (+) x^- p (+) q^- x`` for a regular ``x``."""
    sf = P.semifield
    x = as_vector(x, sf, size=P.n, name="x")
    if np.any(sf.is_zero(x)):
        raise DomainError("objective is defined for regular x only")
    xc = conjugate(x, sf)
    terms = [
        mat_mul(xc, mat_mul(P.A, x, sf), sf),
        mat_mul(xc, P.p, sf),
        mat_mul(sf.pseudo_inv(P.q), x, sf),
    ]
    return float(sf.sum(terms))


def _coupling(P: Problem):
    """``(+)_{k=1..n-1} (q^- A^k p)^(1/(k+2))``."""
    sf = P.semifield
    qc = sf.pseudo_inv(P.q)
    v = P.p
    terms = []
    for k in range(1, P.n):
        v = mat_mul(P.A, v, sf)
        terms.append(sf.pow(mat_mul(qc, v, sf), 1.0 / (k + 2)))
    return float(sf.sum(terms))


def solve(P: Problem) -> SolutionSet:
    """Minimum and complete set of minimizers of ``P``.

    Raises
    ------
    IllPosed
        When the optimal value is the semifield zero, which no regular ``x``
        attains (the digraph of ``A`` is acyclic and ``q^- A^k p`` vanishes
        for every ``k``).
    """
    if not isinstance(P, Problem):
        raise TypeError("solve expects a Problem")
    sf = P.semifield
    A, p, q = P.A, P.p, P.q

    lam = spectral_radius(A, sf).radius
    qc = sf.pseudo_inv(q)
    delta = float(sf.pow(mat_mul(qc, p, sf), 0.5))
    coupling = _coupling(P)
    mu = float(sf.sum([lam, delta, coupling]))
    if sf.is_zero(mu):
        raise IllPosed("optimal value is zero and is not attained by any regular x")

    A_mu = scal_mul(sf.inv(mu), A, sf)
    if not sf.leq_approx(tr_func(A_mu, sf), sf.one, _RTOL, _RTOL):
        raise InternalError("Tr(A/mu) exceeds one although mu dominates the spectral radius")

    irreducible = is_irreducible(A, sf)
    B = bounded_star(A_mu, sf) if irreducible else kleene_generator(A_mu, sf)

    lower = sf.mul(sf.inv(mu), p)
    row = mat_mul(qc, B, sf)
    support = np.flatnonzero(~sf.is_zero(row))
    upper = np.full(P.n, np.nan)
    upper[support] = sf.mul(mu, sf.inv(row[support]))
    if not np.all(sf.leq_approx(lower[support], upper[support], _RTOL, _RTOL)):
        raise InternalError("box for the minimizer parameter is empty")

    nf = normal_form(A, sf)
    return SolutionSet(
        mu=mu,
        lam=float(lam),
        delta=delta,
        coupling=coupling,
        B=B,
        lower=lower,
        upper=upper,
        upper_support=tuple(int(j) for j in support),
        semifield=sf,
        irreducible=irreducible,
        permutation=nf.permutation,
        block_sizes=nf.block_sizes,
    )


def sample_minimizer(S: SolutionSet, u):
    """The minimizer ``B u`` for a regular ``u`` inside the box of ``S``."""
    sf = S.semifield
    u = as_vector(u, sf, size=S.B.shape[0], name="u")
    if not S.in_box(u):
        raise DomainError("u must be regular with lower <= u and u_J <= upper_J")
    return mat_mul(S.B, u, sf)


def is_minimizer(P: Problem, S: SolutionSet, x, rtol=1e-9) -> bool:
    """True iff ``objective(P, x)`` equals ``S.mu`` up to ``rtol``."""
    if P.n != S.B.shape[0]:
        raise DimensionError("problem and solution set have different sizes")
    val = objective(P, x)
    return bool(np.isclose(val, S.mu, rtol=rtol, atol=rtol))
