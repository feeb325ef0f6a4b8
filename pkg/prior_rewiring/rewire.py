# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Rewirings interleaved with the base graph during message passing.

Every rewirer returns a :class:`RewirePlan`: the base graph, a rewired graph
on the same nodes and the per-layer schedule telling each GIN layer which of
the two to propagate on. Node identity is never changed, only adjacency.
"""

import enum
import logging

import numpy as np

from .cayley import trimmed_cayley
from .errors import AlignmentError, RewireError
from .graph import Graph, complete_graph, is_connected, pairs_at_distance

logger = logging.getLogger(__name__)


class Layer(enum.Enum):
    """Graph a message-passing layer propagates on."""

    BASE = 'base'
    REWIRED = 'rewired'


def interleave_schedule(layers):
    """Alternating schedule starting on the base graph."""
    if layers < 1:
        raise RewireError('layers must be positive')
    return tuple(Layer.BASE if i % 2 == 0 else Layer.REWIRED
                 for i in range(layers))


class RewirePlan(object):
    """Base graph, rewired graph and layer schedule."""

    def __init__(self, base, rewired, schedule):
        """Initialize.

        :param base: The base :class:`~prior_rewiring.graph.Graph`.
        :param rewired: Rewired graph on the same node set.
        :param schedule: One :class:`Layer` per model layer.
        """
        if base.num_nodes != rewired.num_nodes:
            raise RewireError('rewired graph has {} nodes, base has {}'.format(
                rewired.num_nodes, base.num_nodes))
        schedule = tuple(Layer(s) for s in schedule)
        if not schedule:
            raise RewireError('schedule must cover at least one layer')
        self.base = base
        self.rewired = rewired
        self.schedule = schedule

    @property
    def num_layers(self):
        """Length of the schedule."""
        return len(self.schedule)

    def graph_for(self, layer):
        """Graph used by 0-based layer ``layer``."""
        if self.schedule[layer] is Layer.BASE:
            return self.base
        return self.rewired

    def relabel(self, mapping):
        """Same plan with nodes renamed ``mapping[u]``."""
        return RewirePlan(self.base.relabel(mapping),
                          self.rewired.relabel(mapping), self.schedule)

    def __repr__(self):
        return '<RewirePlan nodes={} rewired_edges={} schedule={}>'.format(
            self.base.num_nodes, self.rewired.num_edges,
            ''.join('B' if s is Layer.BASE else 'R' for s in self.schedule))


class Alignment(object):
    """Bijection from the nodes of one graph onto the nodes of another."""

    def __init__(self, mapping):
        """Initialize from a sequence ``mapping[node_of_g1] = node_of_g2``."""
        mapping = tuple(int(m) for m in mapping)
        if sorted(mapping) != list(range(len(mapping))):
            raise AlignmentError('alignment is not a bijection')
        self.mapping = mapping

    def __getitem__(self, node):
        return self.mapping[node]

    def __len__(self):
        return len(self.mapping)

    def inverse(self):
        """The inverse alignment."""
        inverse = [0] * len(self.mapping)
        for source, target in enumerate(self.mapping):
            inverse[target] = source
        return Alignment(inverse)

    def common_edges(self, g1, g2):
        """Number of edges of ``g1`` mapped onto edges of ``g2``."""
        return sum(1 for u, v in g1.edges
                   if g2.has_edge(self.mapping[u], self.mapping[v]))


def greedy_align(g1, g2):
    """Greedy approximate maximum-common-edge alignment of ``g1`` onto ``g2``.

    Unassigned nodes of ``g1`` are taken in descending degree order (ties by
    index) and matched to the lowest unassigned node of ``g2``. The
    unassigned neighbours of the ``g1`` node are then matched, in ascending
    order, to the lowest unassigned neighbours of the ``g2`` node; a
    neighbour with no counterpart stays unassigned for a later round.

    :param g1: Source graph.
    :param g2: Target graph with the same number of nodes.
    :returns: :class:`Alignment` from ``g1`` nodes to ``g2`` nodes.
    """
    if g1.num_nodes != g2.num_nodes:
        raise AlignmentError('cannot align {} nodes onto {}'.format(
            g1.num_nodes, g2.num_nodes))
    n = g1.num_nodes
    mapping = [None] * n
    taken = [False] * n
    outer = sorted(range(n), key=lambda u: (-g1.degree(u), u))
    free_target = 0
    for n1 in outer:
        if mapping[n1] is not None:
            continue
        while taken[free_target]:
            free_target += 1
        n2 = free_target
        mapping[n1] = n2
        taken[n2] = True
        candidates = (v for v in g2.neighbours(n2) if not taken[v])
        for m1 in g1.neighbours(n1):
            if mapping[m1] is not None:
                continue
            m2 = next(candidates, None)
            if m2 is None:
                break
            mapping[m1] = m2
            taken[m2] = True
    return Alignment(mapping)


def captured_pairs(rewired, target_pairs):
    """Number of ``target_pairs`` that are edges of ``rewired``."""
    return sum(1 for u, v in target_pairs if rewired.has_edge(u, v))


def _pairs_graph(g, d):
    return Graph(g.num_nodes, pairs_at_distance(g, d))


def random_cayley_placement(g, seed):
    """Trimmed Cayley graph on ``|V(g)|`` nodes under a random permutation.

    Cayley node ``i`` lands on base node ``perm[i]``.
    """
    cayley = trimmed_cayley(g.num_nodes).graph
    perm = np.random.default_rng(seed).permutation(g.num_nodes)
    return cayley.relabel(perm)


def aligned_cayley_placement(g, d):
    """Trimmed Cayley graph pulled back through the greedy alignment.

    Distance-``d`` pairs of ``g`` are aligned onto the Cayley graph; a
    Cayley edge ``{a, b}`` becomes the base-node edge
    ``{M^-1(a), M^-1(b)}``.
    """
    pairs = _pairs_graph(g, d)
    cayley = trimmed_cayley(g.num_nodes).graph
    alignment = greedy_align(pairs, cayley)
    return cayley.relabel(alignment.inverse().mapping)


def rewirer_base_only(g, layers):
    """Propagate on the base graph at every layer."""
    return RewirePlan(g, g, (Layer.BASE,) * layers)


def rewirer_cayley(g, layers, seed):
    """Randomly placed trimmed Cayley expander."""
    if g.num_nodes < 1:
        raise RewireError('cayley rewiring needs at least one node')
    return RewirePlan(g, random_cayley_placement(g, seed),
                      interleave_schedule(layers))


def rewirer_aligned_cayley(g, d, layers):
    """Trimmed Cayley expander aligned onto the distance-``d`` pairs."""
    if not is_connected(g):
        raise RewireError('aligned-cayley needs a connected base graph')
    if g.num_nodes < 1:
        raise RewireError('aligned-cayley needs at least one node')
    return RewirePlan(g, aligned_cayley_placement(g, d),
                      interleave_schedule(layers))


def rewirer_distance_d_pairs(g, d, layers):
    """Connect every pair at hop distance exactly ``d``."""
    return RewirePlan(g, _pairs_graph(g, d), interleave_schedule(layers))


def rewirer_fully_connected(g, layers):
    """Clique over all nodes."""
    return RewirePlan(g, complete_graph(g.num_nodes),
                      interleave_schedule(layers))


def colour_clusters(g, include_uncoloured):
    """Node clusters by colour, colours ascending, members ascending.

    Uncoloured nodes form one trailing cluster when ``include_uncoloured``.
    """
    if not g.is_coloured:
        raise RewireError('cluster rewiring needs a colour map')
    clusters = list(g.colour_classes().values())
    if include_uncoloured:
        uncoloured = g.uncoloured_nodes()
        if uncoloured:
            clusters.append(uncoloured)
    return clusters


def _cayley_cluster_edges(clusters):
    edges = []
    for cluster in clusters:
        cayley = trimmed_cayley(len(cluster)).graph
        edges.extend((cluster[u], cluster[v]) for u, v in cayley.edges)
    return edges


def rewirer_cayley_clusters(g, layers, include_uncoloured=False):
    """Separate, unconnected Cayley expander on every colour class."""
    clusters = colour_clusters(g, include_uncoloured)
    rewired = Graph(g.num_nodes, _cayley_cluster_edges(clusters), g.colours)
    return RewirePlan(g, rewired, interleave_schedule(layers))


def rewirer_fully_connected_clusters(g, layers, include_uncoloured=True):
    """Separate clique on every colour class."""
    clusters = colour_clusters(g, include_uncoloured)
    edges = [(c[i], c[j]) for c in clusters
             for i in range(len(c)) for j in range(i + 1, len(c))]
    rewired = Graph(g.num_nodes, edges, g.colours)
    return RewirePlan(g, rewired, interleave_schedule(layers))


def rewirer_random_cayley_clusters(g, layers, seed,
                                   include_uncoloured=False):
    """Cayley clusters over randomly reassigned colours.

    The coloured nodes are shuffled among the colour classes, so cluster
    sizes are kept while membership carries no information.
    """
    if not g.is_coloured:
        raise RewireError('cluster rewiring needs a colour map')
    colours = g.colours
    nodes = sorted(colours)
    shuffled = np.random.default_rng(seed).permutation(len(nodes))
    values = [colours[u] for u in nodes]
    scrambled = {nodes[int(j)]: values[i] for i, j in enumerate(shuffled)}
    plan = rewirer_cayley_clusters(g.with_colours(scrambled), layers,
                                   include_uncoloured)
    return RewirePlan(g, Graph(g.num_nodes, plan.rewired.edges, colours),
                      plan.schedule)


REWIRERS = (
    'base-graph-only',
    'cayley',
    'aligned-cayley',
    'distance-d-pairs',
    'fully-connected',
    'cayley-clusters',
    'fully-connected-clusters',
    'random-cayley-clusters',
)
"""Names accepted by :func:`build_plan`."""

DISTANCE_REWIRERS = frozenset(['aligned-cayley', 'distance-d-pairs'])
"""Rewirers that need the target distance ``d``."""

COLOUR_REWIRERS = frozenset([
    'cayley-clusters', 'fully-connected-clusters', 'random-cayley-clusters'])
"""Rewirers that need a colour map."""


def build_plan(name, g, layers, d=None, seed=0, include_uncoloured=None):
    """Build the plan of rewirer ``name`` for ``g``.

    :param name: One of :data:`REWIRERS`.
    :param g: Base graph.
    :param layers: Number of model layers.
    :param d: Target distance for distance-based rewirers.
    :param seed: Seed of randomly placed rewirings.
    :param include_uncoloured: Cluster flag; ``None`` picks the rewirer's
        default.
    """
    if name in DISTANCE_REWIRERS and d is None:
        raise RewireError('{} needs a target distance'.format(name))
    cluster_kwargs = {}
    if include_uncoloured is not None:
        cluster_kwargs['include_uncoloured'] = include_uncoloured
    if name == 'base-graph-only':
        return rewirer_base_only(g, layers)
    if name == 'cayley':
        return rewirer_cayley(g, layers, seed)
    if name == 'aligned-cayley':
        return rewirer_aligned_cayley(g, d, layers)
    if name == 'distance-d-pairs':
        return rewirer_distance_d_pairs(g, d, layers)
    if name == 'fully-connected':
        return rewirer_fully_connected(g, layers)
    if name == 'cayley-clusters':
        return rewirer_cayley_clusters(g, layers, **cluster_kwargs)
    if name == 'fully-connected-clusters':
        return rewirer_fully_connected_clusters(g, layers, **cluster_kwargs)
    if name == 'random-cayley-clusters':
        return rewirer_random_cayley_clusters(g, layers, seed,
                                              **cluster_kwargs)
    raise RewireError('unknown rewirer {!r}'.format(name))
