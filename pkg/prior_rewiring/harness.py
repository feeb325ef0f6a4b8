# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Experiment orchestration: configs, cells, sweeps and MSE-ratio reports.

A *cell* is one (rewirer, c-parameters, seed) training run. Sweeps fan cells
out over a process pool and merge the rows by cell position, never by
completion order, so the written CSV files are reproducible byte for byte.
"""

import ast
import copy
import csv
import functools
import logging
import multiprocessing
import os
import zlib
from collections import OrderedDict, namedtuple
from concurrent.futures import ProcessPoolExecutor

import matplotlib
import numpy as np
import torch
from flask import Config
from matplotlib.figure import Figure

from .errors import ConfigError, PriorRewiringError
from .nn import TrainSchedule, build_model, save_checkpoint, train
from .rewire import COLOUR_REWIRERS, DISTANCE_REWIRERS, REWIRERS, build_plan
from .synthdata import PROCEDURAL, DatasetConfig, gen_dataset, \
    placement_seed
from .utils import setting

logger = logging.getLogger(__name__)

BASE_REWIRER = 'base-graph-only'


class ExperimentConfig(object):
    """Full description of an experiment.

    Attributes are the lower-case forms of :attr:`KEYS`. Unset values come
    from the dataset's learning-setup defaults.
    """

    DATASET_KEYS = (
        'TRAIN_COUNT', 'EVAL_COUNT', 'TRAIN_SIZE_RANGE', 'EVAL_SIZE_RANGE',
        'BATCH_SIZE', 'PEAK_LR', 'TOTAL_EPOCHS', 'WARMUP_EPOCHS',
        'DECAY_PER_EPOCH', 'DISTANCE', 'NUM_COLOURS', 'COLOURED_RANGE',
        'C1', 'C2', 'C3',
    )
    """Keys whose defaults depend on the dataset kind."""

    KEYS = ('DATASET', 'REWIRER', 'REWIRERS', 'INCLUDE_UNCOLOURED',
            'HIDDEN_CHANNELS', 'NUM_LAYERS', 'SEEDS', 'DATASET_SEED',
            'SCALE', 'EPOCH_SCALE', 'OUTPUT_DIR', 'SOURCE',
            'STANDARDIZE_TARGETS', 'SWEEP_RATIOS', 'SWEEP_C3_VALUES',
            'SIZE_BIN_WIDTH', 'MEAN_DEGREE', 'MAX_DEGREE') + \
        DATASET_KEYS
    """Every key accepted in a config file."""

    def __init__(self, dataset, **values):
        """Build a config for ``dataset`` (``'a'`` or ``'b'``).

        :param values: Overrides, keyed by lower-case key names.
        """
        if dataset not in ('a', 'b'):
            raise ConfigError('DATASET must be "a" or "b", got {!r}'.format(
                dataset))
        defaults = dict(setting(
            'DATA_A_DEFAULTS' if dataset == 'a' else 'DATA_B_DEFAULTS'))
        self.dataset = dataset
        for key in self.DATASET_KEYS:
            setattr(self, key.lower(), defaults.get(key))
        self.rewirer = BASE_REWIRER
        self.rewirers = tuple(setting(
            'SWEEP_A_REWIRERS' if dataset == 'a' else 'SWEEP_B_REWIRERS'))
        self.include_uncoloured = None
        self.hidden_channels = setting('HIDDEN_CHANNELS')
        self.num_layers = setting('NUM_LAYERS')
        self.seeds = tuple(setting('SEEDS'))
        self.dataset_seed = setting('DATASET_SEED')
        self.scale = setting('SCALE')
        self.epoch_scale = setting('EPOCH_SCALE')
        self.output_dir = setting('OUTPUT_DIR')
        self.source = PROCEDURAL
        self.standardize_targets = False
        self.sweep_ratios = tuple(setting('SWEEP_RATIOS'))
        self.sweep_c3_values = tuple(setting('SWEEP_C3_VALUES'))
        self.size_bin_width = setting('SIZE_BIN_WIDTH')
        self.mean_degree = setting('MEAN_DEGREE')
        self.max_degree = setting('MAX_DEGREE')
        allowed = set(k.lower() for k in self.KEYS)
        for key, value in values.items():
            if key not in allowed or key == 'dataset':
                raise ConfigError('unknown config key {!r}'.format(
                    key.upper()))
            setattr(self, key, value)
        self.validate()

    @classmethod
    def from_mapping(cls, mapping, dataset=None):
        """Build from upper-case keys; unknown keys raise ConfigError."""
        mapping = dict(mapping)
        unknown = sorted(k for k in mapping if k not in cls.KEYS)
        if unknown:
            raise ConfigError('unknown config keys: {}'.format(
                ', '.join(unknown)))
        kind = mapping.pop('DATASET', None)
        if dataset is not None:
            if kind is not None and kind != dataset:
                raise ConfigError('config is for Data {}, not Data {}'.format(
                    kind, dataset))
            kind = dataset
        if kind is None:
            raise ConfigError('DATASET is not set')
        return cls(kind, **{k.lower(): v for k, v in mapping.items()})

    @classmethod
    def from_pyfile(cls, filename, dataset=None):
        """Load a flat ``KEY = value`` file.

        Every name the file assigns must be one of :attr:`KEYS`, whatever
        its case.
        """
        filename = os.path.abspath(str(filename))
        try:
            with open(filename, 'rb') as handle:
                tree = ast.parse(handle.read(), filename)
        except (OSError, SyntaxError, ValueError) as exc:
            raise ConfigError('cannot load {}: {}'.format(filename, exc))
        assigned = set()
        for node in ast.walk(tree):
            if isinstance(node, (ast.Assign, ast.AnnAssign, ast.AugAssign)):
                targets = getattr(node, 'targets', None) or [node.target]
                for target in targets:
                    assigned.update(n.id for n in ast.walk(target)
                                    if isinstance(n, ast.Name))
        unknown = sorted(k for k in assigned
                         if k not in cls.KEYS and not k.startswith('_'))
        if unknown:
            raise ConfigError('unknown config keys in {}: {}'.format(
                filename, ', '.join(unknown)))
        loaded = Config(os.path.dirname(filename))
        try:
            loaded.from_pyfile(filename)
        except (OSError, SyntaxError, NameError) as exc:
            raise ConfigError('cannot load {}: {}'.format(filename, exc))
        return cls.from_mapping(loaded, dataset)

    def replace(self, **values):
        """Copy with some attributes changed and re-validated."""
        other = copy.copy(self)
        for key, value in values.items():
            if not hasattr(other, key):
                raise ConfigError('unknown config key {!r}'.format(key))
            setattr(other, key, value)
        other.validate()
        return other

    def validate(self):
        """Check the config, raising :class:`ConfigError` when invalid."""
        if self.dataset == 'a' and not self.distance:
            raise ConfigError('Data A needs DISTANCE')
        if self.dataset == 'b' and not (self.num_colours and
                                        self.coloured_range):
            raise ConfigError('Data B needs NUM_COLOURS and COLOURED_RANGE')
        for name in (self.rewirer,) + tuple(self.rewirers):
            self.check_rewirer(name)
        if self.scale <= 0 or self.epoch_scale <= 0:
            raise ConfigError('SCALE and EPOCH_SCALE must be positive')
        if not self.seeds:
            raise ConfigError('SEEDS must not be empty')
        if self.num_layers < 1 or self.hidden_channels < 1:
            raise ConfigError('model needs positive width and depth')
        if self.size_bin_width < 1 or self.mean_degree <= 0 or \
                self.max_degree < 2:
            raise ConfigError('invalid procedural topology settings')

    def check_rewirer(self, name):
        """Raise :class:`ConfigError` unless ``name`` suits the dataset."""
        if name not in REWIRERS:
            raise ConfigError('unknown rewirer {!r}'.format(name))
        if name in COLOUR_REWIRERS and self.dataset != 'b':
            raise ConfigError('{} needs coloured Data B graphs'.format(name))
        if name in DISTANCE_REWIRERS and self.dataset != 'a':
            raise ConfigError('{} needs the Data A distance d'.format(name))

    def dataset_config(self, c1=None, c2=None, c3=None):
        """:class:`~prior_rewiring.synthdata.DatasetConfig` at this scale."""
        return DatasetConfig(
            self.dataset,
            train_count=max(1, int(round(self.train_count * self.scale))),
            eval_count=max(1, int(round(self.eval_count * self.scale))),
            train_size_range=tuple(self.train_size_range),
            eval_size_range=tuple(self.eval_size_range),
            c1=self.c1 if c1 is None else c1,
            c2=self.c2 if c2 is None else c2,
            c3=(self.c3 or 0.0) if c3 is None else c3,
            distance=self.distance if self.dataset == 'a' else None,
            num_colours=self.num_colours if self.dataset == 'b' else None,
            coloured_range=(tuple(self.coloured_range)
                            if self.dataset == 'b' else None),
            seed=self.dataset_seed,
            source=self.source,
            bin_width=self.size_bin_width,
            mean_degree=self.mean_degree,
            max_degree=self.max_degree)

    def train_schedule(self):
        """:class:`~prior_rewiring.nn.TrainSchedule` at this epoch scale."""
        return TrainSchedule(
            peak_lr=self.peak_lr,
            total_epochs=max(1, int(round(self.total_epochs *
                                          self.epoch_scale))),
            warmup_epochs=int(round(self.warmup_epochs * self.epoch_scale)),
            decay_per_epoch=self.decay_per_epoch,
            batch_size=self.batch_size)


Cell = namedtuple('Cell', 'rewirer c1 c2 c3 seed')

CellResult = namedtuple('CellResult', 'cell final_eval_mse history')

SweepRow = namedtuple(
    'SweepRow', 'rewirer c1 c2 c3 c2_over_c1 seed final_eval_mse '
                'ratio_to_base')

SummaryRow = namedtuple(
    'SummaryRow', 'rewirer c1 c2 c3 c2_over_c1 mean_ratio sd_ratio count')


def model_seed(seed, rewirer):
    """Model-initialisation seed of ``rewirer`` under ``seed``."""
    return int(np.random.SeedSequence(
        [int(seed), zlib.crc32(rewirer.encode('utf-8'))]).generate_state(1)[0])


def cell_name(dataset, cell):
    """Directory name of a cell's artifacts."""
    return 'data{}-{}-c1_{!r}-c2_{!r}-c3_{!r}-seed{}'.format(
        dataset, cell.rewirer, cell.c1, cell.c2, cell.c3, cell.seed)


@functools.lru_cache(maxsize=4)
def _cached_dataset(dataset_cfg_key):
    kind, counts, ranges, c, extra, seed, source, topology = dataset_cfg_key
    dataset_cfg = DatasetConfig(
        kind, counts[0], counts[1], ranges[0], ranges[1], c[0], c[1], c[2],
        distance=extra[0], num_colours=extra[1], coloured_range=extra[2],
        seed=seed, source=source, bin_width=topology[0],
        mean_degree=topology[1], max_degree=topology[2])
    return gen_dataset(dataset_cfg)


def load_dataset(dataset_cfg):
    """Generate (or reuse within this process) a dataset."""
    key = (dataset_cfg.kind,
           (dataset_cfg.train.count, dataset_cfg.eval.count),
           (dataset_cfg.train.size_range, dataset_cfg.eval.size_range),
           (dataset_cfg.c1, dataset_cfg.c2, dataset_cfg.c3),
           (dataset_cfg.distance, dataset_cfg.num_colours,
            dataset_cfg.coloured_range),
           dataset_cfg.seed, str(dataset_cfg.source),
           (dataset_cfg.train.bin_width, dataset_cfg.train.mean_degree,
            dataset_cfg.train.max_degree))
    return _cached_dataset(key)


def _standardize(train_set, eval_set):
    targets = np.array([s.target for s in train_set])
    mean, std = float(targets.mean()), float(targets.std())
    if std == 0.0:
        std = 1.0

    def scaled(samples):
        return [s.with_target((s.target - mean) / std) for s in samples]

    return scaled(train_set), scaled(eval_set), std


def build_plans(cfg, samples, split, rewirer):
    """Precompute one rewiring plan per sample."""
    return [build_plan(rewirer, s.graph, cfg.num_layers,
                       d=cfg.distance if cfg.dataset == 'a' else None,
                       seed=placement_seed(cfg.dataset_seed, split, i),
                       include_uncoloured=cfg.include_uncoloured)
            for i, s in enumerate(samples)]


def run_experiment(cfg, cell=None):
    """Train and evaluate one cell, writing artifacts under its directory.

    :param cfg: :class:`ExperimentConfig`.
    :param cell: :class:`Cell`; defaults to the config's own rewirer,
        c-parameters and first seed.
    :returns: :class:`CellResult`.
    """
    if cell is None:
        cell = Cell(cfg.rewirer, cfg.c1, cfg.c2, cfg.c3 or 0.0, cfg.seeds[0])
    cfg.check_rewirer(cell.rewirer)
    torch.set_num_threads(1)
    train_set, eval_set = load_dataset(
        cfg.dataset_config(cell.c1, cell.c2, cell.c3))
    scale = 1.0
    if cfg.standardize_targets:
        train_set, eval_set, std = _standardize(train_set, eval_set)
        scale = std * std
    train_plans = build_plans(cfg, train_set, 'train', cell.rewirer)
    eval_plans = build_plans(cfg, eval_set, 'eval', cell.rewirer)
    model = build_model(train_set[0].features.shape[1], cfg.hidden_channels,
                        cfg.num_layers, seed=model_seed(cell.seed,
                                                        cell.rewirer))
    cell_dir = os.path.join(cfg.output_dir, 'cells',
                            cell_name(cfg.dataset, cell))
    os.makedirs(cell_dir, exist_ok=True)
    logger.info('running cell %s', cell_name(cfg.dataset, cell))
    with open(os.path.join(cell_dir, 'metrics.csv'), 'w',
              newline='') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(('epoch', 'lr', 'train_mse', 'eval_mse'))

        def on_epoch(metrics):
            writer.writerow((metrics.epoch, repr(metrics.lr),
                             repr(metrics.train_mse * scale),
                             repr(metrics.eval_mse * scale)))
            handle.flush()

        result = train(model, train_set, train_plans, cfg.train_schedule(),
                       seed=cell.seed, eval_samples=eval_set,
                       eval_plans=eval_plans, on_epoch=on_epoch)
    save_checkpoint(model, os.path.join(cell_dir, 'checkpoint.pt'),
                    rewirer=cell.rewirer, seed=cell.seed)
    final = result.history[-1].eval_mse * scale
    logger.info('cell %s final eval MSE %.6g', cell_name(cfg.dataset, cell),
                final)
    return CellResult(cell, final, result.history)


def sweep_cells(cfg):
    """Cells of the sweep described by ``cfg``, in report order."""
    if BASE_REWIRER not in cfg.rewirers:
        raise ConfigError('sweeps need {} for the MSE ratio'.format(
            BASE_REWIRER))
    c3_values = cfg.sweep_c3_values if cfg.dataset == 'a' else (0.0,)
    cells = []
    for c3 in c3_values:
        for ratio in cfg.sweep_ratios:
            if cfg.dataset == 'a':
                c1, c2 = 1.0, float(ratio)
            else:
                c1, c2 = 1.0 / (1.0 + ratio), ratio / (1.0 + ratio)
            for rewirer in cfg.rewirers:
                for seed in cfg.seeds:
                    cells.append(Cell(rewirer, c1, c2, float(c3), seed))
    return cells


def _run_cell(args):
    cfg, cell = args
    return run_experiment(cfg, cell)


def resolve_workers(workers=None):
    """Worker limit: explicit value, then the environment, then config."""
    if workers is None:
        workers = os.environ.get('PRIOR_REWIRING_SWEEP_WORKERS')
    if workers is not None:
        try:
            return max(1, int(workers))
        except ValueError:
            raise ConfigError('invalid worker count {!r}'.format(workers))
    return max(1, int(setting('SWEEP_WORKERS')))


def run_sweep(cfg, workers=None):
    """Run every cell of a sweep and pair each with its base run.

    :returns: List of :class:`SweepRow`, in :func:`sweep_cells` order.
    """
    cells = sweep_cells(cfg)
    for cell in cells:
        cfg.check_rewirer(cell.rewirer)
    workers = resolve_workers(workers)
    logger.info('sweep over %d cells with %d workers', len(cells), workers)
    if workers == 1:
        results = [run_experiment(cfg, cell) for cell in cells]
    else:
        with ProcessPoolExecutor(
                max_workers=workers,
                mp_context=multiprocessing.get_context('spawn')) as pool:
            results = list(pool.map(_run_cell, [(cfg, c) for c in cells]))
    base = {(r.cell.c1, r.cell.c2, r.cell.c3, r.cell.seed): r.final_eval_mse
            for r in results if r.cell.rewirer == BASE_REWIRER}
    rows = []
    for result in results:
        cell = result.cell
        reference = base[(cell.c1, cell.c2, cell.c3, cell.seed)]
        rows.append(SweepRow(
            cell.rewirer, cell.c1, cell.c2, cell.c3, cell.c2 / cell.c1,
            cell.seed, result.final_eval_mse,
            result.final_eval_mse / reference))
    write_results(rows, os.path.join(cfg.output_dir, 'results.csv'))
    summary = summarize(rows)
    write_summary(summary, os.path.join(cfg.output_dir, 'summary.csv'))
    plot_sweep(summary, os.path.join(cfg.output_dir, 'sweep.svg'),
               cfg.dataset)
    return rows


def run_sweep_a(cfg, workers=None):
    """Data A sweep of c2/c1 (c1 = 1) for every c3 value."""
    if cfg.dataset != 'a':
        raise ConfigError('run_sweep_a needs a Data A config')
    return run_sweep(cfg, workers)


def run_sweep_b(cfg, workers=None):
    """Data B sweep of c2/c1 with c1 + c2 = 1."""
    if cfg.dataset != 'b':
        raise ConfigError('run_sweep_b needs a Data B config')
    return run_sweep(cfg, workers)


def summarize(rows):
    """Mean and sample standard deviation of the ratio across seeds.

    :param rows: Sequence of :class:`SweepRow`.
    :returns: List of :class:`SummaryRow` in first-appearance order.
    """
    if not rows:
        raise PriorRewiringError('nothing to summarize')
    groups = OrderedDict()
    for row in rows:
        key = (row.rewirer, row.c1, row.c2, row.c3, row.c2_over_c1)
        groups.setdefault(key, []).append(row.ratio_to_base)
    summary = []
    for key, ratios in groups.items():
        ratios = np.array(ratios, dtype=np.float64)
        sd = float(ratios.std(ddof=1)) if ratios.size > 1 else 0.0
        summary.append(SummaryRow(*key, mean_ratio=float(ratios.mean()),
                                  sd_ratio=sd, count=int(ratios.size)))
    return summary


def _write_rows(rows, fields, path):
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', newline='') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(fields)
        for row in rows:
            writer.writerow([repr(v) if isinstance(v, float) else v
                             for v in row])
    logger.info('wrote %s', path)


def write_results(rows, path):
    """Write per-cell rows as CSV."""
    _write_rows(rows, SweepRow._fields, path)


def write_summary(summary, path):
    """Write summary rows as CSV."""
    _write_rows(summary, SummaryRow._fields, path)


def plot_sweep(summary, path, dataset):
    """SVG of mean ratio vs c2/c1 with one-sd bands, one panel per c3."""
    c3_values = sorted(set(row.c3 for row in summary))
    figure = Figure(figsize=(4.5 * len(c3_values), 3.6))
    axes = figure.subplots(1, len(c3_values), squeeze=False)[0]
    for ax, c3 in zip(axes, c3_values):
        lines = OrderedDict()
        for row in summary:
            if row.c3 == c3:
                lines.setdefault(row.rewirer, []).append(row)
        for rewirer, points in lines.items():
            points.sort(key=lambda r: r.c2_over_c1)
            x = np.array([p.c2_over_c1 for p in points])
            mean = np.array([p.mean_ratio for p in points])
            sd = np.array([p.sd_ratio for p in points])
            line, = ax.plot(x, mean, label=rewirer)
            floor = np.maximum(mean - sd, mean * 1e-3)
            ax.fill_between(x, floor, mean + sd, color=line.get_color(),
                            alpha=0.2, linewidth=0)
        ax.set_xscale('log')
        ax.set_yscale('log')
        ax.set_xlabel('c2/c1')
        ax.set_ylabel('MSE / base-graph-only MSE')
        if dataset == 'a':
            ax.set_title('c3={}'.format(c3))
    axes[-1].legend(fontsize='small')
    figure.tight_layout()
    with matplotlib.rc_context({'svg.hashsalt': 'prior-rewiring'}):
        figure.savefig(path, format='svg', metadata={'Date': None})
    logger.info('wrote %s', path)

