"""Confluent divided differences and two independent ways of checking them.

* :func:`divided_difference_table` -- the recurrence table, seeded with jet
  coefficients on runs of equal nodes.
* :func:`dd_contour_oracle` -- trapezoidal quadrature of
  ``(1/2 pi i) \\oint f(z) / prod(z - mu_k) dz`` on a circle.
* :func:`dd_distinct_formula` -- the Lagrange-type sum for distinct nodes.

Confluence means *exact* equality of node values.  Upstream clustering
(:func:`greenbound.linalg.cluster_eigenvalues`) produces exactly equal values.
"""

import numpy as np
from scipy.spatial import ConvexHull

from .errors import ContourError, DistinctnessViolation, InvalidInput

__all__ = [
    "as_nodes",
    "node_runs",
    "confluent_table",
    "divided_difference_table",
    "dd_contour_oracle",
    "dd_distinct_formula",
    "gelfond_bound",
    "hull_boundary_points",
]


def as_nodes(nodes):
    """Validate a node list: 1-d, non-empty, finite, equal values contiguous."""
    nodes = np.asarray(nodes, dtype=np.complex128).ravel()
    if nodes.size == 0:
        raise InvalidInput("node list is empty")
    if not np.all(np.isfinite(nodes)):
        raise InvalidInput("node list has non-finite values")
    seen = set()
    prev = None
    for z in nodes:
        z = complex(z)
        if z != prev:
            if z in seen:
                raise InvalidInput(f"equal nodes must be contiguous; {z} reappears")
            seen.add(z)
            prev = z
    return nodes


def node_runs(nodes):
    """List of ``(value, start, length)`` for maximal runs of equal nodes."""
    runs = []
    for i, z in enumerate(nodes):
        if runs and runs[-1][0] == z:
            v, s, n = runs[-1]
            runs[-1] = (v, s, n + 1)
        else:
            runs.append((complex(z), i, 1))
    return runs


def confluent_table(nodes, jets):
    """Top row of the divided-difference table from precomputed jet data.

    ``jets`` maps each distinct node value to an array whose leading axis holds
    Taylor coefficients ``f^{(r)}(node)/r!`` (at least up to the run length
    minus one).  Trailing axes are carried along, so a batch of functions (for
    instance a family indexed by time) is processed in one pass.  Returns an
    array of shape ``(N, *batch)`` with entry ``j = f[mu_1, ..., mu_{j+1}]``.
    """
    N = nodes.size
    first = np.asarray(jets[complex(nodes[0])])
    batch = first.shape[1:]
    d = np.empty((N,) + batch, dtype=np.complex128)
    for i, z in enumerate(nodes):
        d[i] = np.asarray(jets[complex(z)])[0]
    top = np.empty((N,) + batch, dtype=np.complex128)
    top[0] = d[0]
    for j in range(1, N):
        new = np.empty((N - j,) + batch, dtype=np.complex128)
        for i in range(N - j):
            a, b = nodes[i], nodes[i + j]
            if a == b:
                new[i] = np.asarray(jets[complex(a)])[j]
            else:
                new[i] = (d[i + 1] - d[i]) / (b - a)
        d = new
        top[j] = d[0]
    return top


def divided_difference_table(f, nodes):
    """``[f[mu_1], f[mu_1, mu_2], ..., f[mu_1, ..., mu_N]]``."""
    nodes = as_nodes(nodes)
    jets = {}
    for value, _, length in node_runs(nodes):
        jets[value] = f.jet(value, length - 1).coeffs
    return confluent_table(nodes, jets)


def dd_contour_oracle(f, nodes, radius_margin=1.0, quad_points=256):
    """``f[mu_1..mu_N]`` by the trapezoid rule on a circle around the nodes.

    The circle is centred at the node centroid with radius equal to the largest
    node distance plus ``radius_margin``.  Raises :class:`ContourError` if the
    circle passes within 1e-10 of a node or a known pole of ``f``, or if it
    encloses a pole.
    """
    nodes = np.asarray(nodes, dtype=np.complex128).ravel()
    if nodes.size == 0:
        raise InvalidInput("node list is empty")
    center = nodes.mean()
    radius = np.max(np.abs(nodes - center)) + radius_margin
    if radius_margin <= 1e-10:
        raise ContourError("contour passes through a node")
    for p in f.poles:
        dist = abs(p - center)
        if abs(dist - radius) <= 1e-10:
            raise ContourError(f"contour passes through the pole {p}")
        if dist < radius:
            raise ContourError(f"contour encloses the pole {p}")
    theta = 2.0 * np.pi * np.arange(quad_points) / quad_points
    z = center + radius * np.exp(1j * theta)
    omega = np.prod(z[:, None] - nodes[None, :], axis=1)
    return complex(np.mean(f(z) / omega * (z - center)))


def dd_distinct_formula(f, nodes):
    """``sum_j f(mu_j) / prod_{k != j} (mu_j - mu_k)`` for pairwise distinct nodes."""
    nodes = np.asarray(nodes, dtype=np.complex128).ravel()
    diff = nodes[:, None] - nodes[None, :]
    np.fill_diagonal(diff, 1.0)
    if nodes.size > 1:
        off = np.abs(diff[~np.eye(nodes.size, dtype=bool)])
        if off.min() <= 1e-10:
            raise DistinctnessViolation("nodes are not pairwise distinct")
    return complex(np.sum(f(nodes) / np.prod(diff, axis=1)))


def hull_boundary_points(points, samples=512):
    """Points on the boundary of the convex hull of ``points`` (complex).

    Hull vertices are always included.  Collinear point sets give a segment and
    a single distinct point gives itself.
    """
    pts = np.unique(np.asarray(points, dtype=np.complex128).ravel())
    if pts.size == 1:
        return pts
    xy = np.column_stack([pts.real, pts.imag])
    centered = xy - xy.mean(axis=0)
    sv = np.linalg.svd(centered, compute_uv=False)
    if sv.size < 2 or sv[1] <= 1e-12 * max(sv[0], 1.0):
        # collinear: the segment between the two extreme points
        direction = centered @ np.linalg.svd(centered)[2][0]
        a, b = pts[np.argmin(direction)], pts[np.argmax(direction)]
        s = np.linspace(0.0, 1.0, max(samples, 2))
        return a + s * (b - a)
    hull = ConvexHull(xy)
    verts = pts[hull.vertices]
    edges = np.roll(verts, -1) - verts
    lengths = np.abs(edges)
    per_edge = np.maximum(1, np.round(samples * lengths / lengths.sum()).astype(int))
    out = [verts[i] + np.arange(per_edge[i]) / per_edge[i] * edges[i] for i in range(verts.size)]
    return np.concatenate(out)


def gelfond_bound(f, nodes, boundary_samples=512):
    """``max |f^{(N-1)}| / (N-1)!`` over the convex hull of the nodes.

    By the maximum principle the max of the analytic function ``f^{(N-1)}``
    over the hull sits on its boundary, which is sampled; the result is an
    approximate max (increase ``boundary_samples`` to refine).
    """
    nodes = as_nodes(nodes)
    order = nodes.size - 1
    best = 0.0
    for z in hull_boundary_points(nodes, boundary_samples):
        best = max(best, abs(f.jet(z, order).coeffs[order]))
    return float(best)
