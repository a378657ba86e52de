"""Dense complex matrix helpers: validation, norms, spectra, matrix exponential.

Matrices are plain ``numpy`` arrays of dtype ``complex128``.  The operator norm
is the one induced by the Euclidean vector norm, i.e. the largest singular
value.
"""

import json

import numpy as np
import scipy.linalg

from .errors import EigenFailure, InvalidInput, RangeError

__all__ = [
    "as_matrix",
    "op_norm",
    "eigenvalues",
    "cluster_eigenvalues",
    "default_cluster_tol",
    "expm",
    "load_matrix",
    "dump_matrix",
    "matrix_from_json",
    "matrix_to_json",
]


def as_matrix(A):
    """Return ``A`` as a square, finite complex128 array or raise InvalidInput."""
    A = np.asarray(A, dtype=np.complex128)
    if A.ndim == 0:
        A = A.reshape(1, 1)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
        raise InvalidInput(f"expected a non-empty square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise InvalidInput("matrix has non-finite entries")
    return A


def op_norm(A):
    """Spectral norm (largest singular value)."""
    A = as_matrix(A)
    return float(np.linalg.norm(A, 2))


def default_cluster_tol(A):
    return 1e-8 * max(1.0, op_norm(A))


def cluster_eigenvalues(values, tol):
    """Merge eigenvalues closer than ``tol`` (single linkage) into their mean.

    The returned array has the same length as ``values``; members of a cluster
    are replaced by the exact same complex number so that downstream code can
    detect confluence by equality.
    """
    values = np.asarray(values, dtype=np.complex128).ravel()
    n = values.size
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(values[i] - values[j]) < tol:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri

    out = values.copy()
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    for members in groups.values():
        if len(members) > 1:
            out[members] = values[members].mean()
    return out


def eigenvalues(A, cluster_tol=None):
    """Eigenvalues of ``A`` repeated according to algebraic multiplicity.

    LAPACK's Hessenberg-QR driver does the work.  Nearby eigenvalues are then
    merged with :func:`cluster_eigenvalues`; pass ``cluster_tol=0`` to get the
    raw computed values.
    """
    A = as_matrix(A)
    try:
        w = np.linalg.eigvals(A)
    except np.linalg.LinAlgError as exc:
        raise EigenFailure(str(exc)) from exc
    if cluster_tol is None:
        cluster_tol = default_cluster_tol(A)
    if cluster_tol > 0:
        w = cluster_eigenvalues(w, cluster_tol)
    return w


def expm(A, t=1.0):
    """``exp(A t)`` by Pade scaling and squaring (scipy)."""
    A = as_matrix(A)
    t = float(t)
    if not np.isfinite(t):
        raise InvalidInput("t must be finite")
    with np.errstate(over="ignore", invalid="ignore"):
        E = scipy.linalg.expm(A * t)
    if not np.all(np.isfinite(E)):
        raise RangeError(f"exp(At) overflows for |At| = {op_norm(A) * abs(t):.3g}")
    return E


# -- JSON matrix format -------------------------------------------------------
# {"n": N, "entries": [[[re, im], ...], ...]}, n rows of n pairs, row-major.


def matrix_from_json(obj):
    try:
        n = obj["n"]
        rows = obj["entries"]
        if not isinstance(n, int) or n < 1 or len(rows) != n:
            raise ValueError("bad dimension")
        A = np.empty((n, n), dtype=np.complex128)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries")
            for j, pair in enumerate(row):
                re, im = pair
                A[i, j] = complex(float(re), float(im))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed matrix JSON: {exc}") from exc
    return as_matrix(A)


def matrix_to_json(A):
    A = as_matrix(A)
    return {
        "n": int(A.shape[0]),
        "entries": [[[float(z.real), float(z.imag)] for z in row] for row in A],
    }


def load_matrix(path):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: {exc}") from exc
    return matrix_from_json(obj)


def dump_matrix(A, path):
    with open(path, "w") as fh:
        json.dump(matrix_to_json(A), fh)
