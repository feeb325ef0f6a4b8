# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Edge-list and sample file tests."""

import io

import numpy as np
import pytest
from conftest import make_path

from prior_rewiring.errors import EdgeListError
from prior_rewiring.graph import Graph
from prior_rewiring.io import dumps_edge_list, read_colour_file, \
    read_edge_list, read_pairs_file, read_samples, write_edge_list, \
    write_samples
from prior_rewiring.synthdata import Sample


def test_read_edge_list():
    """Header, edges and comments."""
    text = '# a path\n3 2\n0 1\n\n1 2\n'
    g = read_edge_list(io.StringIO(text))
    assert g == make_path(3)
    assert not g.is_coloured


def test_read_colour_block():
    """A trailing colour block attaches colours."""
    text = '3 1\n0 1\n2\n0 4\n2 1\n'
    g = read_edge_list(io.StringIO(text))
    assert g.colours == {0: 4, 2: 1}


def test_write_edge_list(tmpdir):
    """Edges are written sorted, colours after them."""
    g = Graph(3, [(2, 1), (1, 0)], colours={1: 0})
    assert dumps_edge_list(g) == '3 2\n0 1\n1 2\n1\n1 0\n'
    path = tmpdir.join('g.txt')
    write_edge_list(g, str(path))
    assert read_edge_list(str(path)) == g


@pytest.mark.parametrize('text,lineno', [
    ('3\n', 1),
    ('3 2\n0 1\n', 2),
    ('3 1\n0 3\n', 2),
    ('3 1\n0 x\n', 2),
    ('3 1\n0 1\n2 2\n', 3),
    ('3 1\n0 1\n1\n0 1\n1 1\n', 5),
])
def test_malformed_edge_list(text, lineno):
    """Errors carry the line number."""
    with pytest.raises(EdgeListError) as exc:
        read_edge_list(io.StringIO(text))
    assert exc.value.lineno == lineno


def test_error_message_names_file(tmpdir):
    """The file name prefixes the message."""
    path = tmpdir.join('bad.txt')
    path.write('2 1\n0 5\n')
    with pytest.raises(EdgeListError) as exc:
        read_edge_list(str(path))
    assert str(exc.value).startswith('{}:2: '.format(path))


def test_colour_and_pairs_files():
    """Side files of colours and node pairs."""
    assert read_colour_file(io.StringIO('0 1\n3 0\n')) == {0: 1, 3: 0}
    with pytest.raises(EdgeListError):
        read_colour_file(io.StringIO('0 1\n0 2\n'))
    with pytest.raises(EdgeListError):
        read_colour_file(io.StringIO('4 1\n'), num_nodes=3)
    assert read_pairs_file(io.StringIO('0 2\n# c\n1 3\n')) == [(0, 2), (1, 3)]


def test_samples_file(tmpdir):
    """Samples survive a write and read exactly."""
    features = np.array([[0.1, 1.0], [1.0 / 3, 0.0], [2.5e-17, 0.0]])
    samples = [
        Sample(make_path(3), features[:, :1], 1.0 / 7, {'index': 0}),
        Sample(make_path(3).with_colours({0: 0}), features, 2.0,
               {'index': 1, 'kind': 'b'}),
    ]
    path = str(tmpdir.join('s.samples'))
    write_samples(samples, path)
    loaded = read_samples(path)
    assert len(loaded) == 2
    for original, copy in zip(samples, loaded):
        assert copy.graph == original.graph
        assert np.array_equal(copy.features, original.features)
        assert copy.target == original.target
        assert copy.meta == original.meta
