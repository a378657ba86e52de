import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from greenbound.dichotomy import ordered_nodes, split_spectrum
from greenbound.errors import DichotomyViolation
from greenbound.linalg import eigenvalues


def test_split_examples():
    d = split_spectrum(np.diag([-1.0, 2.0]))
    assert (d.k, d.m) == (1, 1)
    assert d.mu[0] == 2 and d.nu[0] == -1
    assert d.gamma_plus == 2 and d.gamma_minus == 1

    d = split_spectrum(np.diag([-1.0, -3.0]))
    assert d.k == 0
    np.testing.assert_array_equal(d.nu, [-3, -1])
    assert d.gamma_minus == 1
    assert d.gamma_plus == np.inf

    with pytest.raises(DichotomyViolation):
        split_spectrum([[0, 1], [-1, 0]])


def test_ordered_nodes_examples():
    d = split_spectrum(np.diag([-1.0, 2.0]))
    np.testing.assert_array_equal(ordered_nodes(d, +1), [2, -1])
    np.testing.assert_array_equal(ordered_nodes(d, -1), [-1, 2])
    d0 = split_spectrum(np.diag([-1.0, -3.0]))
    np.testing.assert_array_equal(ordered_nodes(d0, +1), d0.nu)


def test_repeated_roots_are_contiguous():
    J = np.array([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, -2, 0], [0, 0, 0, 1]], dtype=complex)
    d = split_spectrum(J)
    np.testing.assert_array_equal(d.mu, [1, 1, 1])


def random_dichotomic(seed, n):
    r = np.random.default_rng(seed)
    while True:
        A = r.uniform(-1, 1, (n, n)) + 1j * r.uniform(-1, 1, (n, n))
        if np.min(np.abs(np.linalg.eigvals(A).real)) > 0.05:
            return A


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 6))
def test_round_trip_and_tightness(seed, n):
    A = random_dichotomic(seed, n)
    d = split_spectrum(A)
    assert d.k + d.m == n
    both = np.sort_complex(np.concatenate([d.mu, d.nu]))
    np.testing.assert_allclose(both, np.sort_complex(eigenvalues(A)), atol=1e-8)
    if d.k:
        assert np.any(d.mu.real == d.gamma_plus) and np.all(d.mu.real >= d.gamma_plus)
    if d.m:
        assert np.any(d.nu.real == -d.gamma_minus) and np.all(d.nu.real <= -d.gamma_minus)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 5), st.floats(0.01, 3))
def test_shift_law(seed, n, c):
    A = random_dichotomic(seed, n)
    d = split_spectrum(A)
    lam = np.concatenate([d.mu, d.nu])
    shifted = lam - c
    if np.min(np.abs(shifted.real)) < 1e-6:
        return
    ds = split_spectrum(A - c * np.eye(n))
    got = np.sort_complex(np.concatenate([ds.mu, ds.nu]))
    np.testing.assert_allclose(got, np.sort_complex(shifted), atol=1e-8)
    if ds.m and d.m:
        assert ds.gamma_minus == pytest.approx(d.gamma_minus + c, abs=1e-8) or ds.m > d.m
