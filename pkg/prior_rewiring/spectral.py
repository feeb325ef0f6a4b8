# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Spectral and random-walk diagnostics of expansion.

Dense symmetric eigendecomposition of the combinatorial Laplacian; meant for
graphs of at most a few thousand nodes and never used in the training loop.
"""

import numpy as np

from .errors import GraphError
from .graph import all_pairs_distances, connected_components, is_connected
from .utils import setting


class LaplacianSummary(object):
    """Laplacian spectrum and pseudo-inverse of a graph."""

    def __init__(self, num_nodes, num_edges, laplacian, eigenvalues,
                 pseudoinverse):
        """Initialize; see :func:`laplacian_summary`."""
        self.num_nodes = num_nodes
        self.num_edges = num_edges
        self.laplacian = laplacian
        self.eigenvalues = eigenvalues
        self.pseudoinverse = pseudoinverse

    def zero_eigenvalues(self, tolerance=1e-9):
        """Number of eigenvalues within ``tolerance * max(1, lambda_max)``."""
        if self.num_nodes == 0:
            return 0
        scale = max(1.0, float(self.eigenvalues[-1]))
        return int(np.sum(np.abs(self.eigenvalues) <= tolerance * scale))


def laplacian(g):
    """Dense combinatorial Laplacian ``D - A``."""
    adjacency = g.adjacency_matrix()
    return np.diag(adjacency.sum(axis=1)) - adjacency


def laplacian_summary(g, cutoff=None):
    """Eigenvalues and pseudo-inverse of the Laplacian of ``g``.

    The pseudo-inverse inverts the eigenvalues above
    ``cutoff * lambda_max`` and zeroes the rest.

    :param g: The graph.
    :param cutoff: Relative eigenvalue cutoff.
        (Default: ``PRIOR_REWIRING_PINV_CUTOFF``)
    """
    if cutoff is None:
        cutoff = setting('PINV_CUTOFF')
    lap = laplacian(g)
    n = g.num_nodes
    if n == 0:
        empty = np.zeros((0, 0))
        return LaplacianSummary(0, 0, lap, np.zeros(0), empty)
    eigenvalues, eigenvectors = np.linalg.eigh(lap)
    threshold = cutoff * max(float(eigenvalues[-1]), 0.0)
    keep = eigenvalues > threshold
    inverted = np.zeros_like(eigenvalues)
    inverted[keep] = 1.0 / eigenvalues[keep]
    pinv = (eigenvectors * inverted) @ eigenvectors.T
    pinv = (pinv + pinv.T) / 2
    return LaplacianSummary(n, g.num_edges, lap, eigenvalues, pinv)


def _check_same_component(g, u, v):
    for node in (u, v):
        if not 0 <= node < g.num_nodes:
            raise GraphError('node {} out of range'.format(node))
    for component in connected_components(g):
        if u in component:
            if v not in component:
                raise GraphError(
                    'nodes {} and {} lie in different components'.format(
                        u, v))
            return


def resistance_matrix(g, summary=None):
    """Effective resistance between every pair of nodes.

    Only meaningful for pairs in the same component.
    """
    if summary is None:
        summary = laplacian_summary(g)
    pinv = summary.pseudoinverse
    diagonal = np.diag(pinv)
    resistance = diagonal[:, None] + diagonal[None, :] - 2 * pinv
    np.fill_diagonal(resistance, 0.0)
    return np.maximum(resistance, 0.0)


def effective_resistance(g, u, v, summary=None):
    """Effective resistance between ``u`` and ``v`` with unit resistors.

    ``R(u, v) = L+(u, u) + L+(v, v) - 2 L+(u, v)``.

    :param summary: Precomputed :class:`LaplacianSummary` of ``g``.
        (Default: ``None``)
    """
    _check_same_component(g, u, v)
    if u == v:
        return 0.0
    pinv = (summary or laplacian_summary(g)).pseudoinverse
    return float(max(pinv[u, u] + pinv[v, v] - 2 * pinv[u, v], 0.0))


def commute_time(g, u, v, summary=None):
    """Expected round-trip length of a random walk, ``2 |E| R(u, v)``."""
    if g.num_edges == 0:
        raise GraphError('commute time needs at least one edge')
    return 2.0 * g.num_edges * effective_resistance(g, u, v, summary)


def average_commute_time(g):
    """Mean commute time over all unordered node pairs of a connected graph.

    >>> from prior_rewiring.graph import complete_graph
    >>> round(average_commute_time(complete_graph(3)), 9)
    4.0
    """
    if g.num_edges == 0:
        raise GraphError('average commute time needs at least one edge')
    if not is_connected(g):
        raise GraphError('average commute time needs a connected graph')
    resistance = resistance_matrix(g)
    upper = resistance[np.triu_indices(g.num_nodes, k=1)]
    return float(2.0 * g.num_edges * upper.mean())


def spectral_gap(g):
    """Algebraic connectivity; 0 for disconnected or single-node graphs."""
    if g.num_nodes < 2 or not is_connected(g):
        return 0.0
    eigenvalues = np.linalg.eigvalsh(laplacian(g))
    return float(max(eigenvalues[1], 0.0))


def diameter(g):
    """Largest hop distance of a connected graph."""
    if not is_connected(g):
        raise GraphError('diameter of a disconnected graph is undefined')
    if g.num_nodes == 0:
        return 0
    return int(all_pairs_distances(g).array.max())


def estimate_commute_time(g, u, v, walks=None, seed=0):
    """Monte-Carlo commute time from ``walks`` simulated round trips.

    All walkers advance together; a walker leaves ``u``, reaches ``v`` and
    stops on its first return to ``u``.

    :param g: Connected graph with at least one edge.
    :param u: Start node.
    :param v: Turning node.
    :param walks: Number of round trips.
        (Default: ``PRIOR_REWIRING_COMMUTE_WALKS``)
    :param seed: Seed of the walk generator.
    """
    _check_same_component(g, u, v)
    if walks is None:
        walks = setting('COMMUTE_WALKS')
    if u == v:
        return 0.0
    degrees = np.array(g.degrees())
    table = np.zeros((g.num_nodes, max(1, degrees.max())), dtype=np.int64)
    for node in range(g.num_nodes):
        neighbours = g.neighbours(node)
        table[node, :len(neighbours)] = neighbours
    rng = np.random.default_rng(seed)
    position = np.full(walks, u, dtype=np.int64)
    reached = np.zeros(walks, dtype=bool)
    steps = np.zeros(walks, dtype=np.int64)
    active = np.ones(walks, dtype=bool)
    while active.any():
        idx = np.flatnonzero(active)
        here = position[idx]
        choice = (rng.random(idx.size) * degrees[here]).astype(np.int64)
        position[idx] = table[here, choice]
        steps[idx] += 1
        reached[idx] |= position[idx] == v
        active[idx] = ~(reached[idx] & (position[idx] == u))
    return float(steps.mean())
