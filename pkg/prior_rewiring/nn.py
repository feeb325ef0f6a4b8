# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""GIN regression model with interleaved propagation, and its trainer.

Each GIN layer computes ``phi((1 + eps) h_u + sum_{v in N(u)} h_v)`` where
``phi`` is dense -> batch norm -> ReLU -> dense. Layer ``l`` propagates on
the base or rewired graph of the sample's
:class:`~prior_rewiring.rewire.RewirePlan`. Node states are summed per graph
and fed to an output MLP. Everything runs in float64 on the CPU.
"""

import logging
import math
from collections import OrderedDict, namedtuple

import numpy as np
import torch
from torch import nn

from .errors import ModelError, TrainingError

logger = logging.getLogger(__name__)

DTYPE = torch.float64

ADAM_BETAS = (0.9, 0.999)
ADAM_EPS = 1e-8

CHECKPOINT_VERSION = 1


def make_phi(channels):
    """GIN update MLP: dense, batch norm, ReLU, dense."""
    return nn.Sequential(
        nn.Linear(channels, channels),
        nn.BatchNorm1d(channels),
        nn.ReLU(),
        nn.Linear(channels, channels),
    )


def edge_index_of(g, offset=0):
    """Both orientations of every edge of ``g`` as a ``2 x 2|E|`` tensor."""
    return torch.from_numpy(g.edge_array() + offset)


def aggregate(h, edge_index):
    """Sum of neighbour states for every node."""
    out = torch.zeros_like(h)
    if edge_index.shape[1]:
        out = out.index_add(0, edge_index[1], h[edge_index[0]])
    return out


def gin_propagate(h, edge_index, eps, phi):
    """One GIN update over an edge index."""
    return phi((1 + eps) * h + aggregate(h, edge_index))


def gin_layer_forward(h, g, eps, phi, mode='train'):
    """Apply one GIN layer on graph ``g``.

    :param h: ``|V| x H`` node states.
    :param g: Graph to propagate on.
    :param eps: Self-weight offset (float or scalar tensor).
    :param phi: Update MLP.
    :param mode: ``'train'`` uses batch statistics in batch norm, ``'eval'``
        running averages.
    """
    if h.shape[0] != g.num_nodes:
        raise ModelError('{} node states for {} nodes'.format(
            h.shape[0], g.num_nodes))
    phi.train(mode == 'train')
    return gin_propagate(h, edge_index_of(g), eps, phi)


class GinLayer(nn.Module):
    """GIN layer with a learnt ``eps`` (initialised to 0)."""

    def __init__(self, channels):
        """Initialize a layer of width ``channels``."""
        super(GinLayer, self).__init__()
        self.eps = nn.Parameter(torch.zeros((), dtype=DTYPE))
        self.phi = make_phi(channels).to(DTYPE)

    def forward(self, h, edge_index):
        """Update node states ``h``."""
        return gin_propagate(h, edge_index, self.eps, self.phi)


class GraphBatch(object):
    """Disjoint union of samples ready for a forward pass."""

    def __init__(self, features, edge_indices, graph_index, num_graphs,
                 targets=None):
        """Initialize; see :meth:`collate`."""
        self.features = features
        self.edge_indices = edge_indices
        self.graph_index = graph_index
        self.num_graphs = num_graphs
        self.targets = targets

    @classmethod
    def collate(cls, samples, plans):
        """Concatenate samples and their plans into one batch.

        :param samples: Sequence of :class:`~prior_rewiring.synthdata.Sample`.
        :param plans: One plan per sample, all with the same layer count.
        """
        if len(samples) != len(plans) or not samples:
            raise ModelError('need one plan per sample and a non-empty batch')
        num_layers = plans[0].num_layers
        layer_edges = [[] for _ in range(num_layers)]
        graph_index = []
        offset = 0
        for i, (sample, plan) in enumerate(zip(samples, plans)):
            if plan.num_layers != num_layers:
                raise ModelError('plans disagree on the number of layers')
            if plan.base.num_nodes != sample.graph.num_nodes:
                raise ModelError('plan does not match its sample')
            for layer in range(num_layers):
                layer_edges[layer].append(
                    plan.graph_for(layer).edge_array() + offset)
            graph_index.append(np.full(sample.graph.num_nodes, i))
            offset += sample.graph.num_nodes
        features = torch.from_numpy(np.concatenate(
            [s.features for s in samples])).to(DTYPE)
        edge_indices = [torch.from_numpy(np.concatenate(e, axis=1))
                        for e in layer_edges]
        targets = torch.tensor([s.target for s in samples], dtype=DTYPE)
        return cls(features, edge_indices,
                   torch.from_numpy(np.concatenate(graph_index)),
                   len(samples), targets)


class GinModel(nn.Module):
    """Input linear layer, GIN stack, additive pooling, output MLP."""

    def __init__(self, in_channels, hidden_channels=8, num_layers=5):
        """Initialize.

        :param in_channels: Node feature width ``F``.
        :param hidden_channels: Hidden width ``H``. (Default: ``8``)
        :param num_layers: Number of GIN layers. (Default: ``5``)
        """
        super(GinModel, self).__init__()
        self.in_channels = in_channels
        self.hidden_channels = hidden_channels
        self.input_linear = nn.Linear(in_channels, hidden_channels)
        self.gin_layers = nn.ModuleList(
            GinLayer(hidden_channels) for _ in range(num_layers))
        self.readout = nn.Sequential(
            nn.Linear(hidden_channels, hidden_channels),
            nn.ReLU(),
            nn.Linear(hidden_channels, 1),
        )
        self.to(DTYPE)

    @property
    def num_layers(self):
        """Number of GIN layers."""
        return len(self.gin_layers)

    def node_states(self, batch):
        """Node states after the last GIN layer."""
        if len(batch.edge_indices) != self.num_layers:
            raise ModelError('schedule covers {} layers, model has {}'.format(
                len(batch.edge_indices), self.num_layers))
        if batch.features.shape[1] != self.in_channels:
            raise ModelError('expected {} input channels, got {}'.format(
                self.in_channels, batch.features.shape[1]))
        h = self.input_linear(batch.features)
        for layer, edge_index in zip(self.gin_layers, batch.edge_indices):
            h = layer(h, edge_index)
        return h

    def forward(self, batch):
        """Predictions, one per graph of ``batch``."""
        h = self.node_states(batch)
        pooled = torch.zeros(batch.num_graphs, h.shape[1], dtype=h.dtype)
        pooled = pooled.index_add(0, batch.graph_index, h)
        return self.readout(pooled).squeeze(-1)


def count_parameters(in_channels, hidden_channels, num_layers):
    """Number of scalar parameters of a :class:`GinModel`.

    >>> count_parameters(1, 8, 5)
    902
    """
    h = hidden_channels
    per_layer = 1 + 2 * (h * h + h) + 2 * h
    return (in_channels * h + h) + num_layers * per_layer + (h * h + h) + \
        (h + 1)


def build_model(in_channels, hidden_channels=8, num_layers=5, seed=0):
    """Seeded :class:`GinModel` without touching the global RNG state."""
    with torch.random.fork_rng(devices=[]):
        torch.manual_seed(seed)
        return GinModel(in_channels, hidden_channels, num_layers)


def model_forward(model, sample, plan, mode='eval'):
    """Prediction for a single sample.

    :param mode: ``'train'`` or ``'eval'``; selects batch-norm statistics.
    """
    if plan.base != sample.graph:
        raise ModelError('plan was built for another graph')
    if plan.num_layers != model.num_layers:
        raise ModelError('schedule covers {} layers, model has {}'.format(
            plan.num_layers, model.num_layers))
    model.train(mode == 'train')
    with torch.no_grad():
        return float(model(GraphBatch.collate([sample], [plan]))[0])


def loss_mse(pred, target):
    """Mean squared error.

    >>> float(loss_mse([1.0, 3.0], [0.0, 0.0]))
    5.0
    """
    pred = torch.as_tensor(pred, dtype=DTYPE)
    target = torch.as_tensor(target, dtype=DTYPE)
    if pred.numel() == 0 or pred.shape != target.shape:
        raise ModelError('predictions and targets must be equal, non-empty')
    return torch.mean((pred - target) ** 2)


def backward(model, samples, plans):
    """Exact gradients of the batch MSE for every named parameter.

    The batch is processed in train mode; graphs are disjoint and the loss
    is averaged over them.
    """
    model.train()
    batch = GraphBatch.collate(samples, plans)
    loss = loss_mse(model(batch), batch.targets)
    names, params = zip(*model.named_parameters())
    grads = torch.autograd.grad(loss, params, allow_unused=True)
    return OrderedDict(
        (name, torch.zeros_like(p) if g is None else g)
        for name, p, g in zip(names, params, grads))


class TrainSchedule(object):
    """Linear warmup to ``peak_lr`` followed by exponential decay."""

    def __init__(self, peak_lr, total_epochs, warmup_epochs,
                 decay_per_epoch, batch_size):
        """Initialize."""
        if peak_lr <= 0 or total_epochs < 1 or warmup_epochs < 0:
            raise ModelError('invalid training schedule')
        if not 0 < decay_per_epoch <= 1 or batch_size < 1:
            raise ModelError('invalid training schedule')
        self.peak_lr = peak_lr
        self.total_epochs = total_epochs
        self.warmup_epochs = warmup_epochs
        self.decay_per_epoch = decay_per_epoch
        self.batch_size = batch_size

    def lr(self, epoch):
        """Learning rate of 0-based ``epoch``.

        >>> round(TrainSchedule(1e-3, 200, 50, 0.95, 32).lr(0), 12)
        2e-05
        """
        if epoch < self.warmup_epochs:
            return self.peak_lr * (epoch + 1) / self.warmup_epochs
        return self.peak_lr * self.decay_per_epoch ** (
            epoch - self.warmup_epochs)


EpochMetrics = namedtuple('EpochMetrics', 'epoch lr train_mse eval_mse')

TrainResult = namedtuple('TrainResult', 'model history')


def _batches(order, batch_size):
    for start in range(0, len(order), batch_size):
        yield order[start:start + batch_size]


def evaluate(model, samples, plans, batch_size=32):
    """MSE over ``samples`` with batch-norm running statistics."""
    model.eval()
    total = 0.0
    with torch.no_grad():
        for idx in _batches(list(range(len(samples))), batch_size):
            batch = GraphBatch.collate([samples[i] for i in idx],
                                       [plans[i] for i in idx])
            total += float(loss_mse(model(batch), batch.targets)) * len(idx)
    return total / len(samples)


def train(model, samples, plans, schedule, seed, eval_samples=None,
          eval_plans=None, on_epoch=None):
    """Train ``model`` with Adam under ``schedule``.

    :param model: :class:`GinModel`.
    :param samples: Train samples.
    :param plans: One precomputed plan per train sample.
    :param schedule: :class:`TrainSchedule`.
    :param seed: Seed of the per-epoch shuffling.
    :param eval_samples: Optional eval samples. (Default: ``None``)
    :param eval_plans: Plans of the eval samples. (Default: ``None``)
    :param on_epoch: Callback receiving each :class:`EpochMetrics`.
    :returns: :class:`TrainResult`.
    """
    if len(samples) != len(plans) or not samples:
        raise ModelError('need one plan per train sample')
    optimizer = torch.optim.Adam(model.parameters(), lr=schedule.peak_lr,
                                 betas=ADAM_BETAS, eps=ADAM_EPS)
    scheduler = torch.optim.lr_scheduler.LambdaLR(
        optimizer, lambda epoch: schedule.lr(epoch) / schedule.peak_lr)
    generator = torch.Generator().manual_seed(seed)
    history = []
    for epoch in range(schedule.total_epochs):
        lr = optimizer.param_groups[0]['lr']
        model.train()
        order = torch.randperm(len(samples), generator=generator).tolist()
        total = 0.0
        for step, idx in enumerate(_batches(order, schedule.batch_size)):
            batch = GraphBatch.collate([samples[i] for i in idx],
                                       [plans[i] for i in idx])
            optimizer.zero_grad()
            loss = loss_mse(model(batch), batch.targets)
            if not torch.isfinite(loss):
                raise TrainingError(
                    'non-finite loss {} at epoch {} batch {}'.format(
                        float(loss), epoch, step))
            loss.backward()
            optimizer.step()
            total += float(loss) * len(idx)
        scheduler.step()
        eval_mse = math.nan
        if eval_samples:
            eval_mse = evaluate(model, eval_samples, eval_plans,
                                schedule.batch_size)
        metrics = EpochMetrics(epoch, lr, total / len(samples), eval_mse)
        logger.debug('epoch %d lr=%.3g train_mse=%.6g eval_mse=%.6g',
                     *metrics)
        history.append(metrics)
        if on_epoch is not None:
            on_epoch(metrics)
    return TrainResult(model, history)


def save_checkpoint(model, path, **extra):
    """Write a versioned checkpoint with a parameter-shape header."""
    state = model.state_dict()
    torch.save({
        'format_version': CHECKPOINT_VERSION,
        'in_channels': model.in_channels,
        'hidden_channels': model.hidden_channels,
        'num_layers': model.num_layers,
        'shapes': {k: list(v.shape) for k, v in state.items()},
        'state_dict': state,
        'extra': extra,
    }, str(path))


def load_checkpoint(path):
    """Rebuild a :class:`GinModel` from :func:`save_checkpoint` output."""
    payload = torch.load(str(path), weights_only=True)
    if payload.get('format_version') != CHECKPOINT_VERSION:
        raise ModelError('unsupported checkpoint version {!r}'.format(
            payload.get('format_version')))
    model = GinModel(payload['in_channels'], payload['hidden_channels'],
                     payload['num_layers'])
    for name, tensor in model.state_dict().items():
        if list(tensor.shape) != payload['shapes'].get(name):
            raise ModelError('shape mismatch for {}'.format(name))
    model.load_state_dict(payload['state_dict'])
    return model
