"""Tropical (idempotent) linear algebra and a closed-form extremal solver."""
from .errors import (
    CostGuard,
    DimensionError,
    DomainError,
    IllPosed,
    InternalError,
    MalformedInput,
    NoRegularSolution,
    TropicalError,
)
from .inequalities import ConeSolution, UpperSolution, solve_fixed, solve_upper
from .linalg import (
    bounded_star,
    conjugate,
    identity,
    mat_add,
    mat_mul,
    scal_mul,
    tr_func,
    trace,
    zeros,
)
from .semifield import MAX_PLUS, MAX_TIMES, MIN_PLUS, MIN_TIMES, Semifield, get_semifield
from .solver import Problem, SolutionSet, is_minimizer, objective, sample_minimizer, solve
from .spectral import SpectralResult, eigenvector_irreducible, spectral_radius
from .structure import DTDecomposition, NormalForm, dt_split, is_irreducible, normal_form

__version__ = "0.1.0"
