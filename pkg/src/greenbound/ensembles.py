"""Seeded random matrix ensembles used by the verification campaigns."""

import numpy as np

from .errors import GenerationError

__all__ = ["spawn_rngs", "random_complex_matrix", "random_dichotomic_matrix", "random_hurwitz_matrix"]

T_GRID = np.linspace(0.05, 10.0, 30)


def spawn_rngs(seed, count):
    """Independent generators, one per trial, from a single 64-bit seed."""
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(count)]


def random_complex_matrix(rng, n):
    """Entries with real and imaginary parts uniform on [-1, 1]."""
    return rng.uniform(-1, 1, (n, n)) + 1j * rng.uniform(-1, 1, (n, n))


def random_dichotomic_matrix(rng, n, margin=0.05, min_separation=0.0, max_rejections=1000):
    """Rejection-sample until every eigenvalue has ``|Re| >= margin``.

    ``min_separation`` optionally also rejects matrices with eigenvalues closer
    than that distance.
    """
    for _ in range(max_rejections + 1):
        A = random_complex_matrix(rng, n)
        lam = np.linalg.eigvals(A)
        if np.min(np.abs(lam.real)) < margin:
            continue
        if min_separation > 0 and n > 1:
            gaps = np.abs(lam[:, None] - lam[None, :])[~np.eye(n, dtype=bool)]
            if gaps.min() < min_separation:
                continue
        return A
    raise GenerationError(f"no admissible {n}x{n} matrix after {max_rejections} rejections")


def random_hurwitz_matrix(rng, n, gap_range=(0.05, 1.0)):
    """A random matrix shifted so that ``max Re(lambda) = -gap`` with gap drawn from ``gap_range``.

    Returns ``(A, gap)``.
    """
    B = random_complex_matrix(rng, n)
    gap = rng.uniform(*gap_range)
    shift = np.max(np.linalg.eigvals(B).real) + gap
    return B - shift * np.eye(n), gap
