import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _gen import TAGS, additive_array, from_additive, naive_matmul, random_matrix, random_regular
from tropopt.errors import DimensionError, DomainError
from tropopt.oracle import cycle_mean_radius
from tropopt.linalg import (
    bounded_star,
    conjugate,
    identity,
    is_column_regular,
    is_regular,
    mat_add,
    mat_mul,
    mat_power,
    scal_mul,
    tr_func,
    trace,
    zero_columns,
    zeros,
)
from tropopt.semifield import get_semifield

inf = np.inf


def test_identity_acts_trivially():
    x = np.array([3.0, -1.5])
    np.testing.assert_array_equal(mat_mul([[0, -inf], [-inf, 0]], x), x)


def test_zero_vector_absorbs():
    A = np.array([[1.0, 2.0], [3.0, 4.0]])
    np.testing.assert_array_equal(mat_mul(A, [-inf, -inf]), [-inf, -inf])


def test_hand_product():
    A = [[0, 1], [2, 0]]
    got = mat_mul(A, [0, 0])
    np.testing.assert_array_equal(got, [1, 2])
    np.testing.assert_array_equal(got, naive_matmul(A, [[0], [0]], "max-plus")[:, 0])


def test_row_times_column_is_scalar():
    assert mat_mul([1.0, 2.0], [3.0, -inf]) == 4.0


def test_dimension_errors():
    with pytest.raises(DimensionError):
        mat_mul(np.zeros((2, 3)), np.zeros((2, 3)))
    with pytest.raises(DimensionError):
        mat_add(np.zeros((2, 2)), np.zeros((3, 3)))
    with pytest.raises(DimensionError):
        trace(np.zeros((2, 3)))
    with pytest.raises(DimensionError):
        bounded_star(np.zeros((2, 3)))


def test_scal_mul():
    np.testing.assert_array_equal(scal_mul(2.0, [[1.0, -inf]]), [[3.0, -inf]])
    np.testing.assert_array_equal(scal_mul(2.0, [[1.0, 0.0]], "max-times"), [[2.0, 0.0]])


@pytest.mark.parametrize(
    "tag, x, expected",
    [
        ("max-plus", [1, 2], [-1, -2]),
        ("max-plus", [1, -inf], [-1, -inf]),
        ("max-times", [4, 2], [0.25, 0.5]),
        ("min-times", [4, inf], [0.25, inf]),
    ],
)
def test_conjugate(tag, x, expected):
    np.testing.assert_array_equal(conjugate(x, tag), expected)


def test_conjugate_of_zero_vector():
    with pytest.raises(DomainError):
        conjugate([-inf, -inf])


def test_trace():
    assert trace([[1, 9], [9, 3]]) == 3
    assert trace(zeros((3, 3))) == -inf
    assert trace([[1, -9], [-9, 3]], "min-plus") == 1


def test_bounded_star_examples():
    np.testing.assert_array_equal(bounded_star(zeros((3, 3))), identity(3))
    np.testing.assert_array_equal(bounded_star([[-inf, 1], [-1, -inf]]), [[0, 1], [-1, 0]])
    np.testing.assert_array_equal(bounded_star([[-3.0]]), [[0.0]])


def test_bounded_star_matches_power_sum():
    rng = np.random.default_rng(3)
    for tag in TAGS:
        sf = get_semifield(tag)
        A = random_matrix(rng, 4, tag)
        expected = identity(4, tag)
        for m in range(1, 4):
            expected = sf.add(expected, mat_power(A, m, tag))
        np.testing.assert_array_equal(bounded_star(A, tag), expected)


def test_tr_func_examples():
    assert tr_func([[1.0]]) == 1
    assert tr_func([[-inf, 1], [2, -inf]]) == 3
    assert tr_func(zeros((2, 2))) == -inf


def test_regularity_helpers():
    assert is_regular([1.0, 2.0])
    assert not is_regular([1.0, -inf])
    A = np.array([[-inf, 1], [-inf, 0]])
    assert list(zero_columns(A)) == [0]
    assert not is_column_regular(A)


@pytest.mark.parametrize("tag", TAGS)
def test_mat_mul_matches_naive(tag):
    rng = np.random.default_rng(7)
    for _ in range(20):
        n, k, m = rng.integers(1, 5, size=3)
        A = random_matrix(rng, n, tag, m=k)
        B = random_matrix(rng, k, tag, m=m)
        np.testing.assert_allclose(mat_mul(A, B, tag), naive_matmul(A, B, tag), rtol=1e-12)


@pytest.mark.parametrize("tag", TAGS)
@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 5))
def test_semiring_laws(tag, seed, n):
    rng = np.random.default_rng(seed)
    plus = not get_semifield(tag).multiplicative
    A, B, C = (from_additive(additive_array(rng, (n, n), dyadic=plus), tag) for _ in range(3))
    rtol = 0 if plus else 1e-12
    np.testing.assert_allclose(
        mat_mul(mat_mul(A, B, tag), C, tag), mat_mul(A, mat_mul(B, C, tag), tag), rtol=rtol
    )
    np.testing.assert_allclose(
        mat_mul(A, mat_add(B, C, tag), tag),
        mat_add(mat_mul(A, B, tag), mat_mul(A, C, tag), tag),
        rtol=rtol,
    )


@pytest.mark.parametrize("tag", TAGS)
def test_star_fixed_point_when_no_heavy_cycle(tag):
    rng = np.random.default_rng(11)
    sf = get_semifield(tag)
    for _ in range(50):
        n = int(rng.integers(1, 6))
        A = random_matrix(rng, n, tag)
        tr = tr_func(A, tag)
        if not sf.is_zero(tr):
            # divide by the best cycle mean so that Tr(A) <= 1
            A = scal_mul(sf.inv(cycle_mean_radius(A, tag)), A, tag)
        S = bounded_star(A, tag)
        rhs = sf.add(identity(n, tag), mat_mul(A, S, tag))
        np.testing.assert_allclose(S, rhs, rtol=1e-12, atol=1e-12)
        assert np.all(sf.leq(identity(n, tag), S))


@pytest.mark.parametrize("tag", TAGS)
def test_conjugate_identities(tag):
    rng = np.random.default_rng(5)
    sf = get_semifield(tag)
    for _ in range(50):
        n = int(rng.integers(1, 6))
        x = random_regular(rng, n, tag)
        xc = conjugate(x, tag)
        assert np.isclose(mat_mul(xc, x, tag), sf.one, rtol=1e-12, atol=0)
        outer = mat_mul(x[:, None], xc[None, :], tag)
        assert np.all(sf.leq_approx(identity(n, tag), outer, 1e-12, 0))
        np.testing.assert_allclose(conjugate(xc, tag), x, rtol=1e-12)
