# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Rewiring tests."""

import numpy as np
import pytest
from conftest import make_cycle, make_path
from hypothesis import given, settings
from hypothesis import strategies as st

from prior_rewiring.cayley import trimmed_cayley
from prior_rewiring.errors import AlignmentError, RewireError
from prior_rewiring.graph import Graph, complete_graph, is_connected, \
    pairs_at_distance
from prior_rewiring.rewire import COLOUR_REWIRERS, DISTANCE_REWIRERS, \
    REWIRERS, Alignment, Layer, RewirePlan, aligned_cayley_placement, \
    build_plan, captured_pairs, colour_clusters, greedy_align, \
    interleave_schedule, random_cayley_placement, rewirer_base_only, \
    rewirer_cayley, rewirer_cayley_clusters, \
    rewirer_fully_connected_clusters, rewirer_random_cayley_clusters
from prior_rewiring.synthdata import procedural_topology


@st.composite
def graph_pairs(draw):
    """Two random graphs on the same number of nodes."""
    n = draw(st.integers(min_value=0, max_value=10))
    node = st.integers(0, max(n - 1, 0))

    def edges():
        if n == 0:
            return []
        return draw(st.lists(st.tuples(node, node), max_size=3 * n))

    return Graph(n, edges()), Graph(n, edges())


def test_interleave_schedule():
    """Schedules alternate and start on the base graph."""
    assert interleave_schedule(3) == (Layer.BASE, Layer.REWIRED, Layer.BASE)
    with pytest.raises(RewireError):
        interleave_schedule(0)


def test_plan_checks_node_count():
    """Rewired graphs keep the node set."""
    with pytest.raises(RewireError):
        RewirePlan(make_path(3), make_path(4), (Layer.BASE,))
    plan = RewirePlan(make_path(3), complete_graph(3), interleave_schedule(2))
    assert plan.graph_for(0) is plan.base
    assert plan.graph_for(1) is plan.rewired
    assert plan.num_layers == 2


def test_base_only():
    """Every layer propagates on the base graph."""
    plan = rewirer_base_only(make_path(4), 5)
    assert plan.schedule == (Layer.BASE,) * 5


def test_cayley_rewiring():
    """Random placements are connected expanders on the same nodes."""
    g = Graph(6, [(0, 1)])
    plan = rewirer_cayley(g, 4, seed=3)
    assert plan.rewired.num_nodes == 6
    assert is_connected(plan.rewired)
    assert plan.schedule == interleave_schedule(4)
    assert rewirer_cayley(g, 4, seed=3).rewired == plan.rewired


def test_random_placement_is_relabelled_cayley():
    """A placement is the trimmed Cayley graph under a permutation."""
    g = make_path(10)
    placed = random_cayley_placement(g, seed=1)
    perm = np.random.default_rng(1).permutation(10)
    assert placed == trimmed_cayley(10).graph.relabel(perm)


def test_greedy_align_triangle():
    """Isomorphic triangles align onto each other completely."""
    triangle = complete_graph(3)
    alignment = greedy_align(triangle, triangle)
    assert sorted(alignment.mapping) == [0, 1, 2]
    assert alignment.common_edges(triangle, triangle) == 3


def test_greedy_align_star():
    """The hub is aligned first, onto node 0."""
    star = Graph(4, [(3, 0), (3, 1), (3, 2)])
    target = Graph(4, [(0, 1), (0, 2), (0, 3)])
    alignment = greedy_align(star, target)
    assert alignment[3] == 0
    assert alignment.common_edges(star, target) == 3


def test_greedy_align_size_mismatch():
    """Graphs of different sizes cannot be aligned."""
    with pytest.raises(AlignmentError):
        greedy_align(make_path(3), make_path(4))
    with pytest.raises(AlignmentError):
        Alignment([0, 0])


@settings(max_examples=60, deadline=None)
@given(graph_pairs())
def test_greedy_align_is_bijection(pair):
    """Alignment is total and injective for any pair of graphs."""
    g1, g2 = pair
    alignment = greedy_align(g1, g2)
    assert sorted(alignment.mapping) == list(range(g1.num_nodes))
    inverse = alignment.inverse()
    for u in range(g1.num_nodes):
        assert inverse[alignment[u]] == u


def test_alignment_edge_cases():
    """Empty and complete graphs align."""
    assert len(greedy_align(Graph(0), Graph(0))) == 0
    assert len(greedy_align(Graph(5), complete_graph(5))) == 5


def test_aligned_cayley_captures_pairs():
    """Aligned placement turns distance-d pairs into edges."""
    g = make_path(12)
    placed = aligned_cayley_placement(g, 3)
    assert placed.num_nodes == 12
    assert placed.num_edges == trimmed_cayley(12).graph.num_edges
    assert captured_pairs(placed, pairs_at_distance(g, 3)) > 0


def test_aligned_cayley_errors():
    """Aligned rewiring needs a connected graph and a distance."""
    with pytest.raises(RewireError):
        build_plan('aligned-cayley', Graph(4, [(0, 1), (2, 3)]), 3, d=2)
    with pytest.raises(RewireError):
        build_plan('aligned-cayley', make_path(4), 3)


def test_aligned_cayley_without_pairs():
    """Without distance-d pairs the result is still a trimmed Cayley."""
    g = make_path(4)
    plan = build_plan('aligned-cayley', g, 3, d=9)
    assert plan.rewired.num_edges == trimmed_cayley(4).graph.num_edges
    assert is_connected(plan.rewired)


def test_distance_d_pairs():
    """Four-cycle distance-2 pairs are the diagonals."""
    plan = build_plan('distance-d-pairs', make_cycle(4), 5, d=2)
    assert plan.rewired.edges == frozenset([(0, 2), (1, 3)])


def test_fully_connected():
    """Clique over every node."""
    assert build_plan('fully-connected', make_path(3), 2).rewired.num_edges \
        == 3


def test_cayley_clusters_single_colour():
    """One colour class gets the plain trimmed Cayley graph."""
    g = Graph(6, [(0, 1)], colours={u: 0 for u in range(6)})
    plan = rewirer_cayley_clusters(g, 3)
    assert plan.rewired.edges == trimmed_cayley(6).graph.edges


def test_cluster_edges_stay_in_colour(coloured_graph):
    """No rewired edge crosses colour classes."""
    for name in COLOUR_REWIRERS:
        plan = build_plan(name, coloured_graph, 3, seed=2,
                          include_uncoloured=False)
        for u, v in plan.rewired.edges:
            assert coloured_graph.colour_of(u) is not None
            assert coloured_graph.colour_of(v) is not None
            if name != 'random-cayley-clusters':
                assert coloured_graph.colour_of(u) == \
                    coloured_graph.colour_of(v)


def test_fully_connected_clusters_counts():
    """Cliques of sizes 3 and 4 plus two uncoloured nodes."""
    colours = {0: 0, 1: 0, 2: 0, 3: 1, 4: 1, 5: 1, 6: 1}
    g = Graph(9, [(i, i + 1) for i in range(8)], colours=colours)
    plan = rewirer_fully_connected_clusters(g, 3, include_uncoloured=True)
    assert plan.rewired.num_edges == 3 + 6 + 1
    plan = rewirer_fully_connected_clusters(g, 3, include_uncoloured=False)
    assert plan.rewired.num_edges == 3 + 6


def test_colour_clusters(coloured_graph):
    """Clusters follow colour order; uncoloured nodes come last."""
    assert colour_clusters(coloured_graph, False) == [[0, 2, 4], [1, 5]]
    assert colour_clusters(coloured_graph, True) == [[0, 2, 4], [1, 5],
                                                     [3, 6]]
    with pytest.raises(RewireError):
        colour_clusters(make_path(3), True)


def test_random_cayley_clusters_keep_sizes(coloured_graph):
    """Shuffled clusters keep the edge count of the real ones."""
    real = rewirer_cayley_clusters(coloured_graph, 3)
    shuffled = rewirer_random_cayley_clusters(coloured_graph, 3, seed=5)
    assert shuffled.rewired.num_edges == real.rewired.num_edges
    assert shuffled.base == coloured_graph


def test_captured_pairs():
    """Rewiring onto the target pairs captures all of them."""
    g = make_cycle(6)
    pairs = pairs_at_distance(g, 3)
    assert captured_pairs(Graph(6, pairs), pairs) == len(pairs)
    assert captured_pairs(Graph(6), pairs) == 0


def test_build_plan_registry():
    """Every registered rewirer builds, preserving the node count."""
    g = make_path(8).with_colours({0: 0, 1: 0, 2: 1, 3: 1, 4: 1})
    for name in REWIRERS:
        plan = build_plan(name, g, 5, d=3 if name in DISTANCE_REWIRERS
                          else None)
        assert plan.base == g
        assert plan.rewired.num_nodes == g.num_nodes
        assert plan.num_layers == 5
    with pytest.raises(RewireError):
        build_plan('no-such-rewirer', g, 5)


def test_alignment_beats_random_placement():
    """Aligned placement captures more distance-5 pairs than random ones."""
    rng = np.random.default_rng(0)
    aligned, random = [], []
    for _ in range(50):
        g = procedural_topology(int(rng.integers(20, 31)), rng)
        pairs = pairs_at_distance(g, 5)
        aligned.append(captured_pairs(aligned_cayley_placement(g, 5), pairs))
        random.extend(captured_pairs(random_cayley_placement(g, seed), pairs)
                      for seed in range(100))
    assert np.mean(aligned) > np.mean(random)
