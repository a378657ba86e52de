"""Splitting the spectrum across the imaginary axis."""

from dataclasses import dataclass

import numpy as np

from .errors import DichotomyViolation, InvalidInput
from .linalg import as_matrix, eigenvalues, op_norm

__all__ = ["DichotomyData", "split_spectrum", "ordered_nodes"]


@dataclass(frozen=True)
class DichotomyData:
    """Right roots ``mu`` (Re > 0) and left roots ``nu`` (Re < 0) with gap constants.

    ``gamma_plus = min Re mu`` and ``gamma_minus = -max Re nu``.  An empty half
    gets ``inf`` as its constant.
    """

    mu: np.ndarray
    nu: np.ndarray
    gamma_plus: float
    gamma_minus: float

    @property
    def k(self):
        return self.mu.size

    @property
    def m(self):
        return self.nu.size

    @property
    def n(self):
        return self.mu.size + self.nu.size


def _sorted_half(values):
    # equal values end up adjacent since clustering makes them bitwise equal
    return np.array(sorted(values, key=lambda z: (z.real, z.imag)), dtype=np.complex128)


def split_spectrum(A, axis_tol=None, cluster_tol=None):
    A = as_matrix(A)
    scale = max(1.0, op_norm(A))
    if axis_tol is None:
        axis_tol = 1e-8 * scale
    if axis_tol <= 0:
        raise InvalidInput("axis_tol must be positive")
    lam = eigenvalues(A, cluster_tol)
    on_axis = lam[np.abs(lam.real) <= axis_tol]
    if on_axis.size:
        raise DichotomyViolation(
            f"spectrum intersects imaginary axis: {', '.join(f'{z:.6g}' for z in on_axis)}"
        )
    mu = _sorted_half(lam[lam.real > 0])
    nu = _sorted_half(lam[lam.real < 0])
    gamma_plus = float(mu.real.min()) if mu.size else float("inf")
    gamma_minus = float(-nu.real.max()) if nu.size else float("inf")
    return DichotomyData(mu, nu, gamma_plus, gamma_minus)


def ordered_nodes(d, sign_of_t):
    """``mu`` then ``nu`` for ``t > 0``; ``nu`` then ``mu`` for ``t < 0``."""
    if sign_of_t > 0:
        return np.concatenate([d.mu, d.nu])
    if sign_of_t < 0:
        return np.concatenate([d.nu, d.mu])
    raise InvalidInput("sign_of_t must be +1 or -1")
