# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Configuration for prior-rewiring."""

PRIOR_REWIRING_DATA_A_DEFAULTS = {
    'TRAIN_COUNT': 5000,
    'EVAL_COUNT': 500,
    'TRAIN_SIZE_RANGE': (20, 30),
    'EVAL_SIZE_RANGE': (30, 35),
    'BATCH_SIZE': 32,
    'PEAK_LR': 1e-4,
    'TOTAL_EPOCHS': 200,
    'WARMUP_EPOCHS': 50,
    'DECAY_PER_EPOCH': 0.95,
    'DISTANCE': 5,
    'C1': 1.0,
    'C2': 0.1,
    'C3': 0.2,
}
"""Learning setup and target parameters for Data A (salient pairs)."""

PRIOR_REWIRING_DATA_B_DEFAULTS = {
    'TRAIN_COUNT': 1500,
    'EVAL_COUNT': 300,
    'TRAIN_SIZE_RANGE': (75, 125),
    'EVAL_SIZE_RANGE': (125, 175),
    'BATCH_SIZE': 32,
    'PEAK_LR': 1e-3,
    'TOTAL_EPOCHS': 200,
    'WARMUP_EPOCHS': 50,
    'DECAY_PER_EPOCH': 0.95,
    'NUM_COLOURS': 4,
    'COLOURED_RANGE': (25, 75),
    'C1': 0.5,
    'C2': 0.5,
}
"""Learning setup and target parameters for Data B (colour communities)."""

PRIOR_REWIRING_HIDDEN_CHANNELS = 8
"""Hidden channels of the GIN model."""

PRIOR_REWIRING_NUM_LAYERS = 5
"""Number of GIN layers."""

PRIOR_REWIRING_SIZE_BIN_WIDTH = 5
"""Width of the node-count bins used to spread graph sizes evenly."""

PRIOR_REWIRING_MEAN_DEGREE = 2.1
"""Mean degree targeted by the procedural molecule-like topologies."""

PRIOR_REWIRING_MAX_DEGREE = 4
"""Degree cap of the procedural molecule-like topologies."""

PRIOR_REWIRING_SWEEP_RATIOS = (0.01, 0.1, 1.0, 10.0, 100.0)
"""Grid of c2/c1 values swept in both datasets."""

PRIOR_REWIRING_SWEEP_C3_VALUES = (0.0, 0.1, 0.2)
"""Values of c3 swept for Data A."""

PRIOR_REWIRING_SWEEP_A_REWIRERS = (
    'base-graph-only',
    'cayley',
    'aligned-cayley',
    'distance-d-pairs',
    'fully-connected',
)
"""Rewirers compared on Data A."""

PRIOR_REWIRING_SWEEP_B_REWIRERS = (
    'base-graph-only',
    'cayley',
    'cayley-clusters',
    'fully-connected-clusters',
    'fully-connected',
)
"""Rewirers compared on Data B."""

PRIOR_REWIRING_SEEDS = (0, 1, 2)
"""Model-initialisation seeds of a sweep."""

PRIOR_REWIRING_DATASET_SEED = 0
"""Seed of dataset generation, shared by every cell of a sweep."""

PRIOR_REWIRING_SCALE = 0.2
"""Desk-scale factor applied to train and eval counts."""

PRIOR_REWIRING_EPOCH_SCALE = 0.5
"""Desk-scale factor applied to total and warmup epochs."""

PRIOR_REWIRING_SWEEP_WORKERS = 1
"""Number of sweep cells run concurrently.

Overridden by the ``PRIOR_REWIRING_SWEEP_WORKERS`` environment variable,
itself overridden by ``--workers`` on the command line.
"""

PRIOR_REWIRING_PINV_CUTOFF = 1e-9
"""Relative eigenvalue cutoff of the Laplacian pseudo-inverse."""

PRIOR_REWIRING_COMMUTE_WALKS = 100000
"""Random walks used by the Monte-Carlo commute-time estimator."""

PRIOR_REWIRING_OUTPUT_DIR = 'runs'
"""Default directory for experiment artifacts."""
