# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Cayley graph tests."""

import math

import pytest

from prior_rewiring.cayley import GroupElement, build_cayley, cayley_size, \
    enumerate_group, generators, identity, is_generator_edge, \
    minimal_n_for, trimmed_cayley
from prior_rewiring.errors import CayleyError
from prior_rewiring.graph import bfs_order, is_connected
from prior_rewiring.spectral import diameter, spectral_gap


@pytest.mark.parametrize('n', range(2, 9))
def test_size_matches_enumeration(n):
    """Closed-form group order equals brute-force enumeration."""
    assert cayley_size(n) == len(enumerate_group(n))


def test_known_sizes():
    """Small group orders."""
    assert [cayley_size(n) for n in range(1, 6)] == [1, 6, 24, 48, 120]
    with pytest.raises(CayleyError):
        cayley_size(0)


def test_group_arithmetic():
    """Generators have determinant one and inverses undo them."""
    for n in (2, 5, 7):
        for s in generators(n):
            assert s.det(n) == 1 % n
            assert s.mul(s.inverse(n), n) == identity()
    element = GroupElement(2, 3, 1, 2)
    assert element.det(5) == 1


def test_build_small():
    """n=2 gives a connected six-node graph rooted at the identity."""
    cayley = build_cayley(2)
    assert cayley.num_nodes == 6
    assert cayley.is_full and not cayley.trimmed
    assert is_connected(cayley.graph)
    assert cayley.provenance[0] == identity()
    with pytest.raises(CayleyError):
        build_cayley(1)


@pytest.mark.parametrize('n', range(3, 9))
def test_untrimmed_expanders(n):
    """Untrimmed graphs are connected 4-regular expanders."""
    cayley = build_cayley(n)
    g = cayley.graph
    assert g.num_nodes == cayley_size(n)
    assert set(g.degrees()) == {4}
    assert is_connected(g)
    assert spectral_gap(g) > 0
    assert diameter(g) <= 4 * math.log(g.num_nodes)


def test_edges_follow_generators():
    """Every edge joins elements differing by a generator."""
    cayley = build_cayley(4)
    for u, v in cayley.graph.edges:
        assert is_generator_edge(cayley.provenance[u],
                                 cayley.provenance[v], 4)


def test_minimal_n_for():
    """Smallest group order covering a size."""
    assert minimal_n_for(6) == 2
    assert minimal_n_for(7) == 3
    assert minimal_n_for(50) == 5
    assert minimal_n_for(1) == 2
    with pytest.raises(CayleyError):
        minimal_n_for(0)


@pytest.mark.parametrize('size', [1, 2, 5, 6, 7, 25, 49, 130])
def test_trimmed(size):
    """Trimmed graphs are the connected BFS prefix of the full graph."""
    trimmed = trimmed_cayley(size)
    full = build_cayley(minimal_n_for(size))
    assert trimmed.num_nodes == size
    assert trimmed.trimmed
    assert is_connected(trimmed.graph)
    prefix = bfs_order(full.graph, 0)[:size]
    assert list(trimmed.provenance) == [full.provenance[u] for u in prefix]
    assert max(trimmed.graph.degrees() or [0]) <= 4


def test_trimmed_full_size():
    """Trimming to the group order removes nothing."""
    trimmed = trimmed_cayley(6)
    assert trimmed.is_full
    assert trimmed.graph == build_cayley(2).graph
