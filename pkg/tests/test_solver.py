import numpy as np
import pytest

from _gen import TAGS, additive_array, from_additive, random_irreducible, random_matrix, to_additive
from tropopt.errors import DimensionError, DomainError, IllPosed
from tropopt.inequalities import kleene_generator
from tropopt.linalg import bounded_star, identity, scal_mul, zeros
from tropopt.oracle import GridSpec, evaluate_objective, grid_minimize
from tropopt.semifield import get_semifield
from tropopt.solver import Problem, is_minimizer, objective, sample_minimizer, solve
from tropopt.spectral import eigenvector_irreducible, spectral_radius

inf = np.inf


def oracle_value(P, x):
    return float(evaluate_objective(P, x)[0])


def random_problem(rng, n, tag="max-plus", q_regular=True, lo=-5.0, hi=5.0):
    A = additive_array(rng, (n, n), 0.3, lo, hi)
    p = additive_array(rng, n, 0.2, lo, hi)
    p[rng.integers(n)] = rng.uniform(lo, hi)
    q = additive_array(rng, n, 0.0 if q_regular else 0.4, lo, hi)
    return Problem(from_additive(A, tag), from_additive(p, tag), from_additive(q, tag), tag)


def box_samples(rng, S, k):
    """``k`` random regular points of the parameter box of ``S``."""
    sf = S.semifield
    n = S.B.shape[0]
    lo = to_additive(S.lower, sf)
    hi = to_additive(np.where(np.isnan(S.upper), sf.zero, S.upper), sf)
    hi = np.where(np.isnan(S.upper), np.maximum(lo, 0) + 5, hi)
    lo = np.where(np.isinf(lo), hi - 5, lo)
    hi = np.maximum(hi, lo)
    pts = lo + (hi - lo) * rng.random((k, n))
    return from_additive(pts, sf)


# -- spec examples ------------------------------------------------------------

def test_objective_examples():
    P = Problem(zeros((2, 2)), [-2.0, -2.0], [0.0, 0.0])
    assert objective(P, [0.0, 0.0]) == 0.0
    assert oracle_value(P, [0.0, 0.0]) == 0.0
    P1 = Problem([[3.0]], [0.0], [0.0])
    assert objective(P1, [0.0]) == 3.0
    with pytest.raises(DomainError):
        objective(P, [0.0, -inf])


def test_objective_at_eigenvector_is_at_least_lambda():
    rng = np.random.default_rng(2)
    for _ in range(30):
        A = random_irreducible(rng, 4)
        lam = spectral_radius(A).radius
        x = eigenvector_irreducible(A, lam)
        P = Problem(A, additive_array(rng, 4), additive_array(rng, 4, 0.0))
        assert objective(P, x) >= lam - 1e-9


def test_zero_matrix_instance():
    P = Problem(zeros((2, 2)), [-2.0, -2.0], [0.0, 0.0])
    S = solve(P)
    assert S.mu == -1.0 and S.delta == -1.0
    np.testing.assert_array_equal(S.B, identity(2))
    np.testing.assert_array_equal(S.lower, [-1.0, -1.0])
    np.testing.assert_array_equal(S.upper, [-1.0, -1.0])
    assert S.upper_support == (0, 1)
    np.testing.assert_array_equal(sample_minimizer(S, [-1.0, -1.0]), [-1.0, -1.0])
    value, argmin = grid_minimize(P, GridSpec(-5, 5, 0.01, 2))
    assert value == pytest.approx(-1.0, abs=1e-9)
    np.testing.assert_allclose(argmin, [-1.0, -1.0], atol=1e-9)


def test_one_dimensional_instance():
    P = Problem([[2.0]], [-inf], [0.0])
    S = solve(P)
    assert (S.lam, S.delta, S.mu) == (2.0, -inf, 2.0)
    np.testing.assert_array_equal(S.B, [[0.0]])
    assert S.upper[0] == 2.0 and S.lower[0] == -inf
    for x in np.linspace(-20, 2, 45):
        assert is_minimizer(P, S, [x])
    assert not is_minimizer(P, S, [2.5])
    xs = np.linspace(-10, 10, 2001)
    assert evaluate_objective(P, xs[:, None]).min() == pytest.approx(2.0)


def test_diagonal_instance():
    P = Problem([[0.0, -inf], [-inf, -1.0]], [-2.0, -2.0], [0.0, 0.0])
    S = solve(P)
    assert (S.lam, S.delta, S.mu) == (0.0, -1.0, 0.0)
    np.testing.assert_array_equal(S.B, identity(2))
    np.testing.assert_array_equal(S.lower, [-2.0, -2.0])
    np.testing.assert_array_equal(S.upper, [0.0, 0.0])
    value, _ = grid_minimize(P, GridSpec(-5, 5, 0.25, 2))
    assert value == pytest.approx(0.0, abs=1e-9)
    grid = GridSpec(-5, 5, 0.25, 2)
    for X in grid.chunks():
        vals = evaluate_objective(P, X)
        in_box = np.all((X >= -2) & (X <= 0), axis=1)
        np.testing.assert_array_equal(np.isclose(vals, 0.0, atol=1e-9), in_box)


def test_lambda_delta_alone_can_be_unattained():
    # lam = -10, delta = -50, yet the objective never drops below 10/3
    P = Problem([[-inf, -30.0], [10.0, -inf]], [0.0, -inf], [100.0, 0.0])
    S = solve(P)
    assert S.lam == -10.0 and S.delta == -50.0
    assert S.mu == pytest.approx(10.0 / 3.0)
    value, _ = grid_minimize(P, GridSpec(-10, 10, 0.05, 2))
    assert S.mu - 1e-9 <= value <= S.mu + 0.05 + 1e-9
    x = sample_minimizer(S, S.upper)
    assert oracle_value(P, x) == pytest.approx(S.mu, abs=1e-9)


def test_pushing_above_box_breaks_optimality():
    rng = np.random.default_rng(4)
    for _ in range(50):
        P = random_problem(rng, 3)
        S = solve(P)
        x = sample_minimizer(S, S.upper)
        assert is_minimizer(P, S, x)
        for i in range(3):
            y = x.copy()
            y[i] += 1.0
            assert not is_minimizer(P, S, y)
            assert oracle_value(P, y) > S.mu


def test_sample_minimizer_rejects_points_outside_box():
    P = Problem(zeros((2, 2)), [-2.0, -2.0], [0.0, 0.0])
    S = solve(P)
    with pytest.raises(DomainError):
        sample_minimizer(S, [0.0, -1.0])
    with pytest.raises(DomainError):
        sample_minimizer(S, [-1.0, -inf])


def test_ill_posed():
    with pytest.raises(IllPosed):
        solve(Problem(zeros((2, 2)), [-inf, -inf], [0.0, 0.0]))
    with pytest.raises(IllPosed):
        solve(Problem([[-inf, 1.0], [-inf, -inf]], [0.0, -inf], [-inf, -inf]))


def test_coupling_rescues_zero_lambda_and_delta():
    # q^- p is zero but q^- A p is not: the minimum is (q^- A p)^(1/3)
    P = Problem([[-inf, 3.0], [-inf, -inf]], [-inf, 0.0], [0.0, -inf])
    S = solve(P)
    assert S.lam == -inf and S.delta == -inf
    assert S.mu == pytest.approx(1.0)
    value, _ = grid_minimize(P, GridSpec(-5, 5, 0.05, 2))
    assert S.mu - 1e-9 <= value <= S.mu + 0.05 + 1e-9


def test_problem_validation():
    with pytest.raises(DimensionError):
        Problem(zeros((2, 2)), [0.0], [0.0, 0.0])
    with pytest.raises(DomainError):
        Problem(zeros((1, 1)), [inf], [0.0])
    with pytest.raises(DimensionError):
        Problem(np.zeros((2, 3)), [0.0, 0.0], [0.0, 0.0])


# -- properties -----------------------------------------------------------------

@pytest.mark.parametrize("tag", ["max-plus", "min-plus"])
def test_lower_bound_and_attainment(tag):
    rng = np.random.default_rng(51)
    for _ in range(100):
        n = int(rng.integers(1, 7))
        P = random_problem(rng, n, tag)
        S = solve(P)
        X = from_additive(rng.uniform(-8, 8, size=(300, n)), tag)
        vals = evaluate_objective(P, X)
        sf = P.semifield
        assert np.all(sf.leq_approx(S.mu, vals))
        for u in box_samples(rng, S, 30):
            x = sample_minimizer(S, u)
            assert oracle_value(P, x) == pytest.approx(S.mu, abs=1e-9)


@pytest.mark.parametrize("tag", ["max-times", "min-times"])
def test_times_tags_attain_mu(tag):
    rng = np.random.default_rng(52)
    for _ in range(50):
        n = int(rng.integers(1, 6))
        P = random_problem(rng, n, tag, lo=-2, hi=2)
        S = solve(P)
        for u in box_samples(rng, S, 20):
            assert is_minimizer(P, S, sample_minimizer(S, u))
        x = from_additive(rng.uniform(-3, 3, size=n), tag)
        assert P.semifield.leq_approx(S.mu, objective(P, x))


def test_corollary_and_star_identity():
    rng = np.random.default_rng(53)
    for _ in range(100):
        n = int(rng.integers(1, 7))
        A = random_irreducible(rng, n) if rng.random() < 0.5 else random_matrix(rng, n)
        P = Problem(A, additive_array(rng, n, 0.0), additive_array(rng, n, 0.0))
        S = solve(P)
        A_mu = scal_mul(-S.mu, A)
        np.testing.assert_allclose(S.B, bounded_star(A_mu), rtol=0, atol=1e-12)
        np.testing.assert_allclose(S.B, kleene_generator(A_mu), rtol=0, atol=1e-12)


def test_irregular_q_leaves_free_components():
    rng = np.random.default_rng(54)
    checked = 0
    for _ in range(200):
        P = random_problem(rng, 3, q_regular=False)
        try:
            S = solve(P)
        except IllPosed:
            continue
        free = [j for j in range(3) if j not in S.upper_support]
        if not free:
            continue
        checked += 1
        assert np.all(np.isnan(S.upper[free]))
        u = box_samples(rng, S, 1)[0]
        u[free] = np.maximum(u[free], 0) + 1e3
        assert oracle_value(P, sample_minimizer(S, u)) == pytest.approx(S.mu, abs=1e-9)
    assert checked > 10


def test_zero_q():
    rng = np.random.default_rng(55)
    for _ in range(50):
        n = int(rng.integers(1, 5))
        A = random_irreducible(rng, n)
        P = Problem(A, additive_array(rng, n), np.full(n, -inf))
        S = solve(P)
        assert S.upper_support == ()
        assert S.mu == pytest.approx(spectral_radius(A).radius)
        for u in box_samples(rng, S, 10):
            assert oracle_value(P, sample_minimizer(S, u)) == pytest.approx(S.mu, abs=1e-9)


@pytest.mark.parametrize("tag", TAGS)
def test_solve_is_deterministic(tag):
    rng = np.random.default_rng(56)
    P = random_problem(rng, 4, tag, lo=-2, hi=2)
    a, b = solve(P), solve(P)
    assert a.mu == b.mu
    np.testing.assert_array_equal(a.B, b.B)


def test_min_plus_is_mirror_of_max_plus():
    rng = np.random.default_rng(57)
    for _ in range(30):
        Pmax = random_problem(rng, 3)
        Pmin = Problem(-Pmax.A, -Pmax.p, -Pmax.q, "min-plus")
        Smax, Smin = solve(Pmax), solve(Pmin)
        assert Smin.mu == pytest.approx(-Smax.mu, abs=1e-12)
        np.testing.assert_allclose(Smin.B, -Smax.B, atol=1e-12)
        np.testing.assert_allclose(Smin.lower, -Smax.lower, atol=1e-12)
        np.testing.assert_allclose(Smin.upper, -Smax.upper, atol=1e-12)
