# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Edge-list and dataset-record text formats.

Edge lists start with a ``N M`` header followed by ``M`` lines ``u v``. An
optional trailing colour block is a line holding the count ``C`` followed by
``C`` lines ``node colour``. Lines starting with ``#`` are ignored.
"""

import contextlib
import io as _io
import json
import logging

import numpy as np

from .errors import EdgeListError
from .graph import Graph

logger = logging.getLogger(__name__)


def _open(source, mode):
    if hasattr(source, 'read') or hasattr(source, 'write'):
        return contextlib.nullcontext(source)
    return open(str(source), mode, encoding='utf-8')


class _Lines(object):
    """Iterator over meaningful lines, remembering the line number."""

    def __init__(self, handle, filename):
        self._handle = handle
        self.filename = filename
        self.lineno = 0
        self._pushed = None

    def next(self, required=True):
        if self._pushed is not None:
            line, self._pushed = self._pushed, None
            return line
        for raw in self._handle:
            self.lineno += 1
            line = raw.strip()
            if line and not line.startswith('#'):
                return line
        if required:
            raise self.error('unexpected end of file')
        return None

    def push(self, line):
        self._pushed = line

    def ints(self, line, count):
        fields = line.split()
        if len(fields) != count:
            raise self.error('expected {} integers, got {!r}'.format(
                count, line))
        try:
            return [int(f) for f in fields]
        except ValueError:
            raise self.error('expected integers, got {!r}'.format(line))

    def error(self, message):
        return EdgeListError(message, self.filename, self.lineno)


def _read_graph_block(lines):
    num_nodes, num_edges = lines.ints(lines.next(), 2)
    if num_nodes < 0 or num_edges < 0:
        raise lines.error('negative header values')
    edges = []
    for _ in range(num_edges):
        u, v = lines.ints(lines.next(), 2)
        if not (0 <= u < num_nodes and 0 <= v < num_nodes):
            raise lines.error('edge ({}, {}) out of range'.format(u, v))
        edges.append((u, v))
    colours = None
    line = lines.next(required=False)
    if line is not None and len(line.split()) == 1:
        count = lines.ints(line, 1)[0]
        colours = {}
        for _ in range(count):
            node, colour = lines.ints(lines.next(), 2)
            if not 0 <= node < num_nodes or colour < 0:
                raise lines.error('bad colour line {!r}'.format(
                    '{} {}'.format(node, colour)))
            if node in colours:
                raise lines.error('node {} coloured twice'.format(node))
            colours[node] = colour
    elif line is not None:
        lines.push(line)
    return Graph(num_nodes, edges, colours)


def read_edge_list(source):
    """Read a graph from an edge-list file.

    :param source: Path or open text handle.
    :returns: :class:`~prior_rewiring.graph.Graph`.
    """
    filename = getattr(source, 'name', str(source))
    with _open(source, 'r') as handle:
        lines = _Lines(handle, filename)
        graph = _read_graph_block(lines)
        extra = lines.next(required=False)
        if extra is not None:
            raise lines.error('trailing content {!r}'.format(extra))
    return graph


def _graph_lines(graph):
    yield '{} {}'.format(graph.num_nodes, graph.num_edges)
    for u, v in graph.sorted_edges():
        yield '{} {}'.format(u, v)
    if graph.is_coloured:
        colours = graph.colours
        yield str(len(colours))
        for node in sorted(colours):
            yield '{} {}'.format(node, colours[node])


def write_edge_list(graph, target):
    """Write ``graph`` in edge-list format.

    :param graph: The graph.
    :param target: Path or open text handle.
    """
    with _open(target, 'w') as handle:
        for line in _graph_lines(graph):
            handle.write(line + '\n')


def dumps_edge_list(graph):
    """Edge-list text of ``graph``."""
    buffer = _io.StringIO()
    write_edge_list(graph, buffer)
    return buffer.getvalue()


def read_colour_file(source, num_nodes=None):
    """Read a ``node colour`` file into a dict.

    :param source: Path or open text handle.
    :param num_nodes: If given, node indices are range-checked.
    """
    filename = getattr(source, 'name', str(source))
    colours = {}
    with _open(source, 'r') as handle:
        lines = _Lines(handle, filename)
        line = lines.next(required=False)
        while line is not None:
            node, colour = lines.ints(line, 2)
            if node < 0 or colour < 0 or (
                    num_nodes is not None and node >= num_nodes):
                raise lines.error('bad colour line {!r}'.format(line))
            if node in colours:
                raise lines.error('node {} coloured twice'.format(node))
            colours[node] = colour
            line = lines.next(required=False)
    return colours


def read_pairs_file(source):
    """Read ``u v`` lines into a list of pairs."""
    filename = getattr(source, 'name', str(source))
    pairs = []
    with _open(source, 'r') as handle:
        lines = _Lines(handle, filename)
        line = lines.next(required=False)
        while line is not None:
            pairs.append(tuple(lines.ints(line, 2)))
            line = lines.next(required=False)
    return pairs


def write_samples(samples, target):
    """Write dataset samples, one record each.

    A record is ``sample <index>``, a ``meta`` JSON line, the edge-list block
    (with colour block when coloured), ``features R F`` followed by ``R``
    rows, ``target <value>`` and ``end``. Floats use ``repr`` so that reading
    back is exact.
    """
    with _open(target, 'w') as handle:
        for index, sample in enumerate(samples):
            handle.write('sample {}\n'.format(index))
            handle.write('meta {}\n'.format(
                json.dumps(sample.meta, sort_keys=True)))
            for line in _graph_lines(sample.graph):
                handle.write(line + '\n')
            rows, cols = sample.features.shape
            handle.write('features {} {}\n'.format(rows, cols))
            for row in sample.features:
                handle.write(' '.join(repr(float(x)) for x in row) + '\n')
            handle.write('target {!r}\n'.format(float(sample.target)))
            handle.write('end\n')


def read_samples(source):
    """Read samples written by :func:`write_samples`."""
    from .synthdata import Sample

    filename = getattr(source, 'name', str(source))
    samples = []
    with _open(source, 'r') as handle:
        lines = _Lines(handle, filename)
        line = lines.next(required=False)
        while line is not None:
            if not line.startswith('sample '):
                raise lines.error('expected sample header')
            line = lines.next()
            if not line.startswith('meta '):
                raise lines.error('expected meta line')
            meta = json.loads(line[len('meta '):])
            graph = _read_graph_block(lines)
            line = lines.next()
            fields = line.split()
            if fields[0] != 'features' or len(fields) != 3:
                raise lines.error('expected features header')
            rows, cols = int(fields[1]), int(fields[2])
            features = np.empty((rows, cols), dtype=np.float64)
            for r in range(rows):
                values = lines.next().split()
                if len(values) != cols:
                    raise lines.error('expected {} values'.format(cols))
                features[r] = [float(v) for v in values]
            fields = lines.next().split()
            if fields[0] != 'target' or len(fields) != 2:
                raise lines.error('expected target line')
            target = float(fields[1])
            if lines.next() != 'end':
                raise lines.error('expected end of record')
            samples.append(Sample(graph, features, target, meta))
            line = lines.next(required=False)
    logger.debug('read %d samples from %s', len(samples), filename)
    return samples
