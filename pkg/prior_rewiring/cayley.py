# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Cayley graphs of SL(2, Z_n) and their breadth-first trimming.

The generating set is the pair of elementary matrices ``[[1, 1], [0, 1]]``
and ``[[1, 0], [1, 1]]`` together with their inverses. Node 0 is always the
identity and node labels follow breadth-first discovery order, so the first
``k`` nodes of a Cayley graph are its BFS prefix of size ``k``.
"""

import functools
import itertools
import logging
from collections import deque, namedtuple

from .errors import CayleyError
from .graph import Graph, bfs_order

logger = logging.getLogger(__name__)


class GroupElement(namedtuple('GroupElement', 'a b c d')):
    """Matrix ``[[a, b], [c, d]]`` of SL(2, Z_n), entries in ``[0, n)``."""

    __slots__ = ()

    def det(self, n):
        """Determinant modulo ``n``."""
        return (self.a * self.d - self.b * self.c) % n

    def mul(self, other, n):
        """Matrix product ``self @ other`` modulo ``n``."""
        return GroupElement(
            (self.a * other.a + self.b * other.c) % n,
            (self.a * other.b + self.b * other.d) % n,
            (self.c * other.a + self.d * other.c) % n,
            (self.c * other.b + self.d * other.d) % n,
        )

    def inverse(self, n):
        """Inverse of a determinant-one matrix modulo ``n``."""
        return GroupElement(self.d % n, -self.b % n, -self.c % n, self.a % n)


def identity():
    """The identity matrix."""
    return GroupElement(1, 0, 0, 1)


def generators(n):
    """Symmetric generating set, in application order.

    Order: first generator, its inverse, second generator, its inverse.
    """
    upper = GroupElement(1, 1 % n, 0, 1)
    lower = GroupElement(1, 0, 1 % n, 1)
    return (upper, upper.inverse(n), lower, lower.inverse(n))


class CayleyGraph(object):
    """A Cayley graph together with the group element behind every node."""

    def __init__(self, graph, n, provenance, trimmed):
        """Initialize.

        :param graph: The :class:`~prior_rewiring.graph.Graph`.
        :param n: Group parameter.
        :param provenance: Sequence mapping node index -> GroupElement.
        :param trimmed: Whether the graph comes from BFS trimming.
        """
        if len(provenance) != graph.num_nodes:
            raise CayleyError('provenance does not cover every node')
        self.graph = graph
        self.n = n
        self.provenance = tuple(provenance)
        self.trimmed = trimmed

    @property
    def num_nodes(self):
        """Number of nodes."""
        return self.graph.num_nodes

    @property
    def is_full(self):
        """Whether every group element is present."""
        return self.graph.num_nodes == cayley_size(self.n)

    def __repr__(self):
        return '<CayleyGraph n={} nodes={}{}>'.format(
            self.n, self.num_nodes, ' trimmed' if self.trimmed else '')


def _prime_factors(n):
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            factors.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        factors.append(n)
    return factors


def cayley_size(n):
    """Number of elements of SL(2, Z_n).

    >>> [cayley_size(n) for n in range(1, 6)]
    [1, 6, 24, 48, 120]
    """
    if n < 1:
        raise CayleyError('n must be a positive integer, got {}'.format(n))
    size = n ** 3
    for p in _prime_factors(n):
        size = size // (p * p) * (p * p - 1)
    return size


def enumerate_group(n):
    """All elements of SL(2, Z_n) in lexicographic order."""
    if n < 1:
        raise CayleyError('n must be a positive integer, got {}'.format(n))
    return [GroupElement(*m) for m in itertools.product(range(n), repeat=4)
            if (m[0] * m[3] - m[1] * m[2]) % n == 1 % n]


@functools.lru_cache(maxsize=None)
def build_cayley(n):
    """Untrimmed Cayley graph of SL(2, Z_n) under the symmetric generators.

    :param n: Group parameter, at least 2.
    :returns: :class:`CayleyGraph` with node 0 the identity.
    """
    if n < 2:
        raise CayleyError('Cayley graphs need n >= 2, got {}'.format(n))
    gens = generators(n)
    start = identity()
    index = {start: 0}
    order = [start]
    edges = []
    queue = deque([start])
    while queue:
        element = queue.popleft()
        u = index[element]
        for s in gens:
            neighbour = element.mul(s, n)
            if neighbour not in index:
                index[neighbour] = len(order)
                order.append(neighbour)
                queue.append(neighbour)
            edges.append((u, index[neighbour]))
    expected = cayley_size(n)
    if len(order) != expected:
        # The two generators generate SL(2, Z_n); left-over elements would
        # mean the construction is broken.
        raise CayleyError('reached {} of {} elements for n={}'.format(
            len(order), expected, n))
    logger.debug('built Cayley graph n=%d with %d nodes', n, len(order))
    return CayleyGraph(Graph(len(order), edges), n, order, trimmed=False)


def minimal_n_for(size):
    """Smallest ``n >= 2`` whose Cayley graph has at least ``size`` nodes.

    >>> minimal_n_for(50)
    5
    """
    if size < 1:
        raise CayleyError('size must be positive, got {}'.format(size))
    n = 2
    while cayley_size(n) < size:
        n += 1
    return n


@functools.lru_cache(maxsize=None)
def trimmed_cayley(size):
    """Cayley graph trimmed to its first ``size`` BFS nodes.

    The result is the subgraph induced on the BFS prefix of the smallest
    Cayley graph with enough nodes; it is always connected.
    """
    full = build_cayley(minimal_n_for(size))
    keep = bfs_order(full.graph, 0)[:size]
    graph = full.graph.induced_subgraph(keep)
    return CayleyGraph(graph, full.n, [full.provenance[u] for u in keep],
                       trimmed=True)


def is_generator_edge(g, h, n):
    """Whether ``g^-1 h`` lies in the symmetric generating set."""
    return g.inverse(n).mul(h, n) in generators(n)
