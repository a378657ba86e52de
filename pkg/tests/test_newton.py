from math import e, log

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from greenbound.errors import InvalidInput
from greenbound.jets import constant, exp_fn, polynomial
from greenbound.linalg import expm
from greenbound.newton import (
    NewtonPolynomial,
    build_newton,
    eval_matrix,
    eval_scalar,
    hermite_check,
    matrix_function,
    spectral_nodes,
)

square = polynomial([0, 0, 1])


def random_matrix(seed, n, norm=None):
    r = np.random.default_rng(seed)
    A = r.uniform(-1, 1, (n, n)) + 1j * r.uniform(-1, 1, (n, n))
    if norm is not None:
        A *= norm / np.linalg.norm(A, 2)
    return A


def test_build_examples():
    np.testing.assert_allclose(build_newton(square, [1, 2, 3]).coeffs, [1, 3, 1])
    np.testing.assert_allclose(build_newton(exp_fn(1), [0, 0]).coeffs, [1, 1])
    np.testing.assert_allclose(build_newton(exp_fn(1), [0, log(2)]).coeffs, [1, 1 / log(2)])


def test_eval_scalar_examples():
    assert eval_scalar(build_newton(square, [1, 2, 3]), 5) == pytest.approx(25)
    assert eval_scalar(NewtonPolynomial([4.0], [2.5]), 17 - 3j) == 2.5
    assert eval_scalar(build_newton(exp_fn(1), [0, log(2)]), log(2)) == pytest.approx(2)


def test_eval_matrix_examples():
    A = np.array([[0, 1], [0, 0]], dtype=complex)
    np.testing.assert_array_equal(eval_matrix(NewtonPolynomial([1.0], [3.0]), A), 3 * np.eye(2))
    np.testing.assert_allclose(eval_matrix(build_newton(square, [1, 2, 3]), A), np.zeros((2, 2)), atol=1e-15)
    D = np.diag([-1.0, 2.0])
    p = build_newton(exp_fn(1), spectral_nodes(D))
    np.testing.assert_allclose(eval_matrix(p, D), expm(D, 1), rtol=1e-12)


def test_eval_matrix_dimension_check():
    with pytest.raises(InvalidInput):
        matrix_function(exp_fn(1), np.eye(2), [1.0, 1.0, 1.0])


def test_matrix_function_examples():
    D = np.diag([-1.0, 0.5, 2.0])
    np.testing.assert_allclose(matrix_function(exp_fn(0.7), D), np.diag(np.exp(0.7 * np.diag(D))), rtol=1e-13)
    A = random_matrix(11, 4, norm=3.0)
    F = matrix_function(exp_fn(1.0), A)
    assert np.linalg.norm(F - expm(A, 1), 2) <= 1e-8 * np.linalg.norm(expm(A, 1), 2)
    np.testing.assert_allclose(matrix_function(constant(1), A), np.eye(4), atol=1e-15)


def test_matrix_function_jordan_block():
    J = np.array([[-1, 1, 0], [0, -1, 1], [0, 0, -1]], dtype=complex)
    nodes = spectral_nodes(J)
    assert np.all(nodes == nodes[0])
    np.testing.assert_allclose(matrix_function(exp_fn(2.0), J, nodes), expm(J, 2.0), rtol=1e-12, atol=1e-15)


def test_hermite_examples():
    p = build_newton(exp_fn(1), [0, 0])
    assert hermite_check(p, exp_fn(1), 1e-12)
    bad = NewtonPolynomial(p.nodes, p.coeffs + np.array([0, 1]))
    assert not hermite_check(bad, exp_fn(1), 1e-12)
    assert hermite_check(build_newton(square, [1, 2, 3]), square, 1e-12)


def test_hermite_confluent():
    f = exp_fn(-0.5)
    nodes = [1, 1, 1, 2j, 2j, -1]
    assert hermite_check(build_newton(f, nodes), f, 1e-10)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 5), st.floats(-1.5, 1.5), st.floats(-1.5, 1.5))
def test_calculus_homomorphism(seed, n, s, t):
    A = random_matrix(seed, n, norm=2.0)
    nodes = spectral_nodes(A)
    lhs = matrix_function(exp_fn(s) * exp_fn(t), A, nodes)
    rhs = matrix_function(exp_fn(s), A, nodes) @ matrix_function(exp_fn(t), A, nodes)
    assert np.linalg.norm(lhs - rhs, 2) <= 1e-7 * np.linalg.norm(rhs, 2)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(2, 5), st.randoms(use_true_random=False))
def test_node_order_independence(seed, n, rnd):
    A = random_matrix(seed, n, norm=2.0)
    nodes = list(spectral_nodes(A))
    F = matrix_function(exp_fn(1.0), A, nodes)
    rnd.shuffle(nodes)
    G = matrix_function(exp_fn(1.0), A, nodes)
    assert np.linalg.norm(F - G, 2) <= 1e-8 * np.linalg.norm(F, 2)


def test_degree_bound():
    nodes = [0.5, -1, 2j, 3, 3]
    p = build_newton(square, nodes)
    assert len(p) == 5
    np.testing.assert_allclose(p.coeffs[3:], 0, atol=1e-10)
