# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Undirected simple graphs with traversal and distance queries.

Every rewiring, base topology and diagnostic in this package is expressed on
:class:`Graph`. Traversals break ties by ascending node index so that
trimming and alignment are reproducible.
"""

from collections import deque

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse import csgraph

from .errors import GraphError


class Graph(object):
    """Immutable undirected simple graph with optional node colours.

    Self-loops and duplicate edges passed to the constructor are dropped.
    """

    __slots__ = ('_num_nodes', '_edges', '_adjacency', '_colours',
                 '_edge_array')

    def __init__(self, num_nodes, edges=(), colours=None):
        """Build a graph.

        :param num_nodes: Number of nodes, labelled ``0 .. num_nodes - 1``.
        :param edges: Iterable of ``(u, v)`` pairs.
        :param colours: Optional mapping node -> colour id. Nodes missing
            from the mapping are uncoloured. (Default: ``None``)
        """
        num_nodes = int(num_nodes)
        if num_nodes < 0:
            raise GraphError('num_nodes must be non-negative')
        self._num_nodes = num_nodes
        pairs = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < num_nodes and 0 <= v < num_nodes):
                raise GraphError(
                    'edge ({}, {}) out of range for {} nodes'.format(
                        u, v, num_nodes))
            if u == v:
                continue
            pairs.add((u, v) if u < v else (v, u))
        self._edges = frozenset(pairs)
        self._edge_array = None
        neighbours = [[] for _ in range(num_nodes)]
        for u, v in pairs:
            neighbours[u].append(v)
            neighbours[v].append(u)
        self._adjacency = tuple(tuple(sorted(n)) for n in neighbours)
        if colours is None:
            self._colours = None
        else:
            checked = {}
            for node, colour in dict(colours).items():
                node, colour = int(node), int(colour)
                if not 0 <= node < num_nodes:
                    raise GraphError('coloured node {} out of range'.format(
                        node))
                if colour < 0:
                    raise GraphError('colour ids must be non-negative')
                checked[node] = colour
            self._colours = checked

    @property
    def num_nodes(self):
        """Number of nodes."""
        return self._num_nodes

    @property
    def num_edges(self):
        """Number of undirected edges."""
        return len(self._edges)

    @property
    def edges(self):
        """Edges as a frozenset of ``(u, v)`` pairs with ``u < v``."""
        return self._edges

    def sorted_edges(self):
        """Edges in ascending order."""
        return sorted(self._edges)

    def neighbours(self, u):
        """Neighbours of ``u`` in ascending order."""
        self._check_node(u)
        return self._adjacency[u]

    def degree(self, u):
        """Degree of ``u``."""
        return len(self.neighbours(u))

    def degrees(self):
        """Degree of every node as a list."""
        return [len(n) for n in self._adjacency]

    def has_edge(self, u, v):
        """Whether ``{u, v}`` is an edge."""
        return (u, v) in self._edges or (v, u) in self._edges

    @property
    def is_coloured(self):
        """Whether the graph carries a colour map."""
        return self._colours is not None

    @property
    def colours(self):
        """Copy of the colour map, or ``None``."""
        return None if self._colours is None else dict(self._colours)

    def colour_of(self, u):
        """Colour of ``u`` or ``None`` when uncoloured."""
        self._check_node(u)
        if self._colours is None:
            return None
        return self._colours.get(u)

    def colour_classes(self):
        """Map colour -> ascending list of nodes of that colour."""
        if self._colours is None:
            raise GraphError('graph has no colour map')
        classes = {}
        for node in sorted(self._colours):
            classes.setdefault(self._colours[node], []).append(node)
        return {c: classes[c] for c in sorted(classes)}

    def uncoloured_nodes(self):
        """Ascending list of nodes without a colour."""
        colours = self._colours or {}
        return [u for u in range(self._num_nodes) if u not in colours]

    def with_colours(self, colours):
        """Copy of the graph carrying ``colours``."""
        return Graph(self._num_nodes, self._edges, colours)

    def relabel(self, mapping):
        """Return the graph with node ``u`` renamed ``mapping[u]``.

        :param mapping: Sequence giving the new label of every node; must be
            a permutation of ``range(num_nodes)``.
        """
        mapping = [int(m) for m in mapping]
        if sorted(mapping) != list(range(self._num_nodes)):
            raise GraphError('relabelling is not a permutation')
        colours = None
        if self._colours is not None:
            colours = {mapping[u]: c for u, c in self._colours.items()}
        return Graph(
            self._num_nodes,
            ((mapping[u], mapping[v]) for u, v in self._edges),
            colours)

    def induced_subgraph(self, nodes):
        """Subgraph induced on ``nodes``, relabelled in the given order."""
        nodes = [int(u) for u in nodes]
        index = {u: i for i, u in enumerate(nodes)}
        if len(index) != len(nodes):
            raise GraphError('duplicate nodes in induced subgraph')
        for u in nodes:
            self._check_node(u)
        edges = [(index[u], index[v]) for u, v in self._edges
                 if u in index and v in index]
        colours = None
        if self._colours is not None:
            colours = {index[u]: c for u, c in self._colours.items()
                       if u in index}
        return Graph(len(nodes), edges, colours)

    def edge_array(self):
        """Directed 2 x 2|E| array holding both orientations of every edge.

        Columns are sorted by (source, target); the array is read-only.
        """
        if self._edge_array is None:
            arcs = sorted(
                [(u, v) for u, v in self._edges] +
                [(v, u) for u, v in self._edges])
            array = np.array(arcs, dtype=np.int64).reshape(-1, 2).T.copy()
            array.setflags(write=False)
            self._edge_array = array
        return self._edge_array

    def adjacency_matrix(self, dtype=np.float64):
        """Dense symmetric adjacency matrix."""
        adjacency = np.zeros((self._num_nodes, self._num_nodes), dtype=dtype)
        for u, v in self._edges:
            adjacency[u, v] = 1
            adjacency[v, u] = 1
        return adjacency

    def to_sparse(self):
        """Symmetric adjacency as a :class:`scipy.sparse.csr_matrix`."""
        n = self._num_nodes
        if not self._edges:
            return csr_matrix((n, n), dtype=np.int8)
        rows, cols = zip(*self._edges)
        data = np.ones(2 * len(rows), dtype=np.int8)
        return csr_matrix(
            (data, (rows + cols, cols + rows)), shape=(n, n))

    def _check_node(self, u):
        if not 0 <= u < self._num_nodes:
            raise GraphError('node {} out of range for {} nodes'.format(
                u, self._num_nodes))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._num_nodes == other._num_nodes and
                self._edges == other._edges and
                self._colours == other._colours)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._num_nodes, self._edges))

    def __repr__(self):
        return '<Graph nodes={} edges={}{}>'.format(
            self._num_nodes, len(self._edges),
            ' coloured' if self.is_coloured else '')


class DistanceMatrix(object):
    """All-pairs hop distances with an explicit unreachable marker."""

    UNREACHABLE = -1
    """Marker stored for pairs in different components."""

    def __init__(self, dist):
        """Wrap a square integer array of distances."""
        self._dist = np.asarray(dist, dtype=np.int64)
        self._dist.setflags(write=False)

    @property
    def array(self):
        """The read-only ``|V| x |V|`` integer array."""
        return self._dist

    def __getitem__(self, pair):
        return int(self._dist[pair])

    def __len__(self):
        return self._dist.shape[0]

    def is_reachable(self, u, v):
        """Whether ``v`` is reachable from ``u``."""
        return self._dist[u, v] != self.UNREACHABLE


def bfs_order(g, start):
    """Nodes of ``start``'s component in breadth-first visit order.

    Neighbours are visited in ascending index order.

    :param g: The graph.
    :param start: Root node.
    :returns: List of node indices, ``start`` first.
    """
    if not 0 <= start < g.num_nodes:
        raise GraphError('start node {} out of range for {} nodes'.format(
            start, g.num_nodes))
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in g.neighbours(u):
            if v not in seen:
                seen.add(v)
                order.append(v)
                queue.append(v)
    return order


def all_pairs_distances(g):
    """Shortest-path hop counts between every pair of nodes.

    >>> d = all_pairs_distances(Graph(3, [(0, 1), (1, 2)]))
    >>> d[0, 2]
    2
    """
    n = g.num_nodes
    if n == 0:
        return DistanceMatrix(np.zeros((0, 0), dtype=np.int64))
    dist = csgraph.shortest_path(g.to_sparse(), method='D', directed=False,
                                 unweighted=True)
    out = np.full((n, n), DistanceMatrix.UNREACHABLE, dtype=np.int64)
    finite = np.isfinite(dist)
    out[finite] = dist[finite].astype(np.int64)
    return DistanceMatrix(out)


def pairs_at_distance(g, d, distances=None):
    """Unordered pairs ``(i, j)``, ``i < j``, exactly ``d`` hops apart.

    :param g: The graph.
    :param d: Positive hop distance.
    :param distances: Precomputed :class:`DistanceMatrix` of ``g``.
        (Default: ``None``)
    """
    if d < 1:
        raise GraphError('distance must be a positive integer')
    if distances is None:
        distances = all_pairs_distances(g)
    upper = np.triu(distances.array == d, k=1)
    return {(int(i), int(j)) for i, j in np.argwhere(upper)}


def connected_components(g):
    """Maximal connected node sets, ordered by their smallest member."""
    if g.num_nodes == 0:
        return []
    _, labels = csgraph.connected_components(g.to_sparse(), directed=False)
    groups = {}
    for node, label in enumerate(labels):
        groups.setdefault(int(label), set()).add(node)
    return sorted(groups.values(), key=min)


def is_connected(g):
    """Whether ``g`` has exactly one component.

    The empty graph counts as connected.
    """
    return len(connected_components(g)) <= 1


def complete_graph(num_nodes):
    """Clique on ``num_nodes`` nodes."""
    return Graph(num_nodes, ((u, v) for u in range(num_nodes)
                             for v in range(u + 1, num_nodes)))
