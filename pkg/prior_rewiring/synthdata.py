# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Synthetic graph-regression benchmarks over base topologies.

Data A rewards interactions between node pairs at a salient distance ``d``;
Data B rewards interactions inside colour communities. Both add a
nearest-neighbour term over the base graph edges. Sums run over unordered
pairs ``i < j``.
"""

import logging
import os

import numpy as np

from .errors import DatasetError, GraphError, TopologyError
from .graph import Graph, all_pairs_distances, is_connected
from .io import read_edge_list
from .utils import setting

logger = logging.getLogger(__name__)

PROCEDURAL = 'procedural'
"""Source name of the built-in molecule-like topology generator."""


class Sample(object):
    """One regression instance."""

    def __init__(self, graph, features, target, meta=None):
        """Initialize.

        :param graph: Base :class:`~prior_rewiring.graph.Graph`.
        :param features: ``|V| x F`` float array.
        :param target: Scalar regression target.
        :param meta: Dict of generation metadata. (Default: ``None``)
        """
        features = np.asarray(features, dtype=np.float64)
        if features.ndim != 2 or features.shape[0] != graph.num_nodes:
            raise DatasetError('features must have one row per node')
        self.graph = graph
        self.features = features
        self.target = float(target)
        self.meta = dict(meta or {})

    @property
    def values(self):
        """Scalar node values (first feature column)."""
        return self.features[:, 0]

    def with_target(self, target):
        """Copy carrying another target."""
        return Sample(self.graph, self.features, target, self.meta)

    def __repr__(self):
        return '<Sample nodes={} target={:.6g}>'.format(
            self.graph.num_nodes, self.target)


def size_bins(size_range, bin_width=None):
    """Node-count bins covering the half-open ``size_range``.

    >>> size_bins((20, 30))
    [(20, 25), (25, 30)]
    >>> size_bins((1, 1))
    [(1, 2)]
    """
    if bin_width is None:
        bin_width = setting('SIZE_BIN_WIDTH')
    low, high = int(size_range[0]), int(size_range[1])
    if low < 1 or high < low:
        raise DatasetError('invalid size range {!r}'.format(size_range))
    if high == low:
        return [(low, low + 1)]
    return [(start, min(start + bin_width, high))
            for start in range(low, high, bin_width)]


class CorpusSpec(object):
    """Where base topologies come from and which sizes they may have."""

    def __init__(self, source=PROCEDURAL, size_range=(20, 30), count=0,
                 bin_width=None, mean_degree=None, max_degree=None):
        """Initialize.

        :param source: ``'procedural'`` or a directory of edge-list files.
        :param size_range: Half-open node-count range ``(min, max)``.
        :param count: Number of graphs in the split.
        :param bin_width: Width of the size bins.
            (Default: ``PRIOR_REWIRING_SIZE_BIN_WIDTH``)
        :param mean_degree: Procedural mean-degree target.
            (Default: ``PRIOR_REWIRING_MEAN_DEGREE``)
        :param max_degree: Procedural degree cap.
            (Default: ``PRIOR_REWIRING_MAX_DEGREE``)
        """
        self.source = source
        self.size_range = (int(size_range[0]), int(size_range[1]))
        self.count = int(count)
        self.bin_width = bin_width or setting('SIZE_BIN_WIDTH')
        self.mean_degree = mean_degree or setting('MEAN_DEGREE')
        self.max_degree = max_degree or setting('MAX_DEGREE')
        self.bins = size_bins(self.size_range, self.bin_width)

    def bin_for(self, index):
        """Size bin of sample ``index`` (round robin over the bins)."""
        return self.bins[index % len(self.bins)]


_CORPUS_CACHE = {}


def _load_corpus(directory):
    directory = os.path.abspath(str(directory))
    if directory not in _CORPUS_CACHE:
        graphs = []
        for name in sorted(os.listdir(directory)):
            path = os.path.join(directory, name)
            if not os.path.isfile(path) or name.startswith('.'):
                continue
            graph = read_edge_list(path)
            if not is_connected(graph) or graph.num_nodes == 0:
                logger.warning('rejecting disconnected base graph %s', path)
                continue
            graphs.append(graph)
        _CORPUS_CACHE[directory] = graphs
        logger.info('loaded %d base graphs from %s', len(graphs), directory)
    return _CORPUS_CACHE[directory]


def procedural_topology(num_nodes, rng, mean_degree=None, max_degree=None):
    """Connected molecule-like graph: capped random tree plus extra edges.

    :param num_nodes: Number of nodes.
    :param rng: :class:`numpy.random.Generator`.
    :param mean_degree: Mean degree to aim for.
    :param max_degree: Degree cap.
    """
    mean_degree = mean_degree or setting('MEAN_DEGREE')
    max_degree = max_degree or setting('MAX_DEGREE')
    degree = [0] * num_nodes
    edges = set()
    for node in range(1, num_nodes):
        open_nodes = [u for u in range(node) if degree[u] < max_degree]
        parent = open_nodes[int(rng.integers(len(open_nodes)))]
        edges.add((parent, node))
        degree[parent] += 1
        degree[node] += 1
    target = int(round(mean_degree * num_nodes / 2.0))
    attempts = 0
    while len(edges) < target and attempts < 50 * num_nodes:
        attempts += 1
        u, v = (int(x) for x in rng.integers(num_nodes, size=2))
        if u == v:
            continue
        pair = (min(u, v), max(u, v))
        if (pair in edges or degree[u] >= max_degree or
                degree[v] >= max_degree):
            continue
        edges.add(pair)
        degree[u] += 1
        degree[v] += 1
    return Graph(num_nodes, edges)


def gen_topology(corpus, seed, size_bin=None):
    """Draw a connected base topology whose size lies in ``size_bin``.

    :param corpus: :class:`CorpusSpec`.
    :param seed: Integer seed or :class:`numpy.random.SeedSequence`.
    :param size_bin: Half-open ``(low, high)`` node-count bin.
        (Default: the whole size range)
    """
    rng = np.random.default_rng(seed)
    if size_bin is None:
        low, high = corpus.bins[0][0], corpus.bins[-1][1]
    else:
        low, high = size_bin
    if corpus.source == PROCEDURAL:
        num_nodes = int(rng.integers(low, high))
        return procedural_topology(num_nodes, rng, corpus.mean_degree,
                                   corpus.max_degree)
    candidates = [g for g in _load_corpus(corpus.source)
                  if low <= g.num_nodes < high]
    if not candidates:
        raise TopologyError(
            'no base graph in {} has between {} and {} nodes'.format(
                corpus.source, low, high - 1))
    return candidates[int(rng.integers(len(candidates)))]


def _pair_terms(values):
    values = np.asarray(values, dtype=np.float64)
    i, j = np.triu_indices(values.shape[0], k=1)
    return i, j, np.exp(values[i] + values[j])


def target_data_a(g, values, c1, c2, c3, d):
    """Salient-pair target.

    ``c1`` weighs adjacent pairs, ``c2`` pairs at distance ``d`` and ``c3``
    every other pair, each pair contributing ``exp(x_i + x_j)``.

    >>> target_data_a(Graph(3, [(0, 1), (1, 2)]), [0, 0, 0], 1, 1, 0, 2)
    3.0
    """
    if len(values) != g.num_nodes:
        raise DatasetError('one value per node expected')
    if not is_connected(g):
        raise GraphError('Data A targets need a connected base graph')
    i, j, terms = _pair_terms(values)
    dist = all_pairs_distances(g).array[i, j]
    near = dist == 1
    salient = dist == d
    rest = ~(near | salient)
    return float(c1 * terms[near].sum() + c2 * terms[salient].sum() +
                 c3 * terms[rest].sum())


def target_data_b(g, values, c1, c2):
    """Community target.

    ``c1`` weighs base edges and ``c2`` every unordered pair of distinct
    nodes sharing a colour.
    """
    if not g.is_coloured:
        raise DatasetError('Data B targets need a colour map')
    if len(values) != g.num_nodes:
        raise DatasetError('one value per node expected')
    values = np.asarray(values, dtype=np.float64)
    edge_total = sum(float(np.exp(values[u] + values[v]))
                     for u, v in g.sorted_edges())
    colour_total = 0.0
    for members in g.colour_classes().values():
        _, _, terms = _pair_terms(values[members])
        colour_total += terms.sum()
    return float(c1 * edge_total + c2 * colour_total)


class DatasetConfig(object):
    """Parameters of one synthetic dataset."""

    def __init__(self, kind, train_count, eval_count, train_size_range,
                 eval_size_range, c1, c2, c3=0.0, distance=None,
                 num_colours=None, coloured_range=None, seed=0,
                 source=PROCEDURAL, bin_width=None, mean_degree=None,
                 max_degree=None):
        """Initialize; ``kind`` is ``'a'`` or ``'b'``.

        ``bin_width``, ``mean_degree`` and ``max_degree`` go to both
        :class:`CorpusSpec` splits.
        """
        if kind not in ('a', 'b'):
            raise DatasetError('dataset kind must be a or b')
        if kind == 'a' and (distance is None or distance < 1):
            raise DatasetError('Data A needs a positive distance d')
        if kind == 'b' and (not num_colours or coloured_range is None):
            raise DatasetError('Data B needs colours and a coloured range')
        if min(c1, c2, c3) < 0:
            raise DatasetError('c parameters must be non-negative')
        self.kind = kind
        self.source = source
        topology = dict(bin_width=bin_width, mean_degree=mean_degree,
                        max_degree=max_degree)
        self.train = CorpusSpec(source, train_size_range, train_count,
                                **topology)
        self.eval = CorpusSpec(source, eval_size_range, eval_count,
                               **topology)
        self.c1, self.c2, self.c3 = float(c1), float(c2), float(c3)
        self.distance = distance
        self.num_colours = num_colours
        self.coloured_range = coloured_range
        self.seed = int(seed)


def _colour_sample(graph, rng, num_colours, coloured_range):
    low, high = coloured_range
    k = int(rng.integers(low, high + 1))
    if k > graph.num_nodes:
        raise DatasetError('cannot colour {} of {} nodes'.format(
            k, graph.num_nodes))
    nodes = rng.choice(graph.num_nodes, size=k, replace=False)
    colours = rng.integers(num_colours, size=k)
    return {int(u): int(c) for u, c in zip(nodes, colours)}


def one_hot_colours(graph, num_colours):
    """``|V| x num_colours`` one-hot colour rows, zero for uncoloured."""
    encoding = np.zeros((graph.num_nodes, num_colours))
    for node, colour in (graph.colours or {}).items():
        encoding[node, colour] = 1.0
    return encoding


def _make_sample(cfg, corpus, split, index, seed_seq):
    topology_seed, value_seed = seed_seq.spawn(2)
    size_bin = corpus.bin_for(index)
    graph = gen_topology(corpus, topology_seed, size_bin)
    rng = np.random.default_rng(value_seed)
    values = rng.random(graph.num_nodes)
    meta = {
        'kind': cfg.kind,
        'split': split,
        'index': index,
        'seed': cfg.seed,
        'size_bin': list(size_bin),
        'c1': cfg.c1,
        'c2': cfg.c2,
    }
    if cfg.kind == 'a':
        target = target_data_a(graph, values, cfg.c1, cfg.c2, cfg.c3,
                               cfg.distance)
        meta.update(c3=cfg.c3, d=cfg.distance)
        features = values[:, None]
    else:
        graph = graph.with_colours(_colour_sample(
            graph, rng, cfg.num_colours, cfg.coloured_range))
        target = target_data_b(graph, values, cfg.c1, cfg.c2)
        meta.update(num_colours=cfg.num_colours)
        features = np.hstack([values[:, None],
                              one_hot_colours(graph, cfg.num_colours)])
    return Sample(graph, features, target, meta)


def placement_seed(dataset_seed, split, index):
    """Seed of the random Cayley placement of one sample."""
    offset = 0 if split == 'train' else 1
    return int(np.random.SeedSequence(
        [dataset_seed, offset, index]).generate_state(1)[0])


def _gen_split(cfg, corpus, split, seed_seq):
    samples = []
    for index, child in enumerate(seed_seq.spawn(corpus.count)):
        samples.append(_make_sample(cfg, corpus, split, index, child))
    logger.debug('generated %d %s samples (Data %s)', len(samples), split,
                 cfg.kind.upper())
    return samples


def gen_dataset(cfg):
    """Generate the train and eval splits described by ``cfg``.

    :param cfg: :class:`DatasetConfig`.
    :returns: ``(train, eval)`` lists of :class:`Sample`.
    """
    train_seq, eval_seq = np.random.SeedSequence(cfg.seed).spawn(2)
    return (_gen_split(cfg, cfg.train, 'train', train_seq),
            _gen_split(cfg, cfg.eval, 'eval', eval_seq))


def gen_dataset_a(cfg):
    """Data A train/eval splits."""
    if cfg.kind != 'a':
        raise DatasetError('not a Data A configuration')
    return gen_dataset(cfg)


def gen_dataset_b(cfg):
    """Data B train/eval splits."""
    if cfg.kind != 'b':
        raise DatasetError('not a Data B configuration')
    return gen_dataset(cfg)
