"""Newton-form interpolating polynomials and the functional calculus ``f(A) = p(A)``."""

from dataclasses import dataclass

import numpy as np

from .divided import as_nodes, divided_difference_table, node_runs
from .errors import InvalidInput
from .jets import Jet
from .linalg import as_matrix, eigenvalues

__all__ = [
    "NewtonPolynomial",
    "build_newton",
    "eval_scalar",
    "eval_matrix",
    "newton_basis",
    "matrix_function",
    "spectral_nodes",
    "hermite_check",
]


@dataclass(frozen=True)
class NewtonPolynomial:
    """``p(z) = c_0 + c_1 (z - mu_1) + ... + c_{N-1} (z - mu_1)...(z - mu_{N-1})``."""

    nodes: np.ndarray
    coeffs: np.ndarray

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=np.complex128).ravel()
        coeffs = np.asarray(self.coeffs, dtype=np.complex128).ravel()
        if nodes.size != coeffs.size:
            raise InvalidInput("nodes and coefficients differ in length")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "coeffs", coeffs)

    def __len__(self):
        return self.coeffs.size

    def __call__(self, z):
        return eval_scalar(self, z)


def build_newton(f, nodes):
    nodes = as_nodes(nodes)
    return NewtonPolynomial(nodes, divided_difference_table(f, nodes))


def _nested(p, x, one):
    """Horner scheme in the Newton basis for any ring element ``x``."""
    c, mu = p.coeffs, p.nodes
    acc = c[-1] * one
    for j in range(c.size - 2, -1, -1):
        acc = acc * (x - mu[j] * one) + c[j] * one
    return acc


def eval_scalar(p, z):
    c, mu = p.coeffs, p.nodes
    acc = c[-1]
    for j in range(c.size - 2, -1, -1):
        acc = acc * (z - mu[j]) + c[j]
    return acc


def eval_matrix(p, A):
    """``p(A)`` with ``N - 1`` matrix products: ``(...(c_{N-1}(A - mu_{N-1}) + c_{N-2})...)``."""
    A = as_matrix(A)
    n = A.shape[0]
    I = np.eye(n, dtype=np.complex128)
    c, mu = p.coeffs, p.nodes
    acc = c[-1] * I
    for j in range(c.size - 2, -1, -1):
        acc = acc @ (A - mu[j] * I)
        acc[np.diag_indices(n)] += c[j]
    return acc


def newton_basis(A, nodes, prefix=None):
    """Stack of ``prefix @ prod_{l<j} (A - mu_l)`` for ``j = 0..len(nodes)-1``.

    Evaluating many polynomials on the same nodes reduces to contracting their
    coefficient vectors against this stack.
    """
    A = as_matrix(A)
    n = A.shape[0]
    I = np.eye(n, dtype=np.complex128)
    M = I.copy() if prefix is None else np.array(prefix, dtype=np.complex128)
    out = np.empty((len(nodes), n, n), dtype=np.complex128)
    for j, mu in enumerate(nodes):
        out[j] = M
        M = M @ (A - mu * I)
    return out


def spectral_nodes(A, cluster_tol=None):
    """Clustered eigenvalues sorted by (Re, Im), so equal values are contiguous."""
    lam = eigenvalues(A, cluster_tol)
    return np.array(sorted(lam, key=lambda z: (z.real, z.imag)), dtype=np.complex128)


def matrix_function(f, A, nodes=None):
    """``f(A)`` through the interpolating polynomial on ``nodes`` (the spectrum of A)."""
    A = as_matrix(A)
    nodes = as_nodes(spectral_nodes(A) if nodes is None else nodes)
    if nodes.size != A.shape[0]:
        raise InvalidInput(f"{nodes.size} nodes for a {A.shape[0]}x{A.shape[0]} matrix")
    return eval_matrix(build_newton(f, nodes), A)


def hermite_check(p, f, tolerance=1e-10):
    """True iff ``p^{(j)}(lam) = f^{(j)}(lam)`` for every node ``lam`` and ``j`` below its multiplicity.

    Both sides are compared as Taylor coefficients, relative to ``1 + |f coeff|``.
    """
    for value, _, length in node_runs(p.nodes):
        order = length - 1
        pj = _nested(p, Jet.variable(value, order), Jet.constant(value, 1.0, order))
        fj = f.jet(value, order)
        if np.any(np.abs(pj.coeffs - fj.coeffs) > tolerance * (1 + np.abs(fj.coeffs))):
            return False
    return True
