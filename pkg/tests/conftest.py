# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Pytest configuration."""

import shutil
import tempfile

import pytest
from flask import Flask

from prior_rewiring import PriorRewiring
from prior_rewiring.graph import Graph
from prior_rewiring.harness import ExperimentConfig


def pytest_addoption(parser):
    """Add ``--runslow`` for the training runs."""
    parser.addoption('--runslow', action='store_true', default=False,
                     help='run slow end-to-end training tests')


def pytest_collection_modifyitems(config, items):
    """Skip ``slow`` tests unless ``--runslow`` is given."""
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture()
def instance_path():
    """Temporary instance path."""
    path = tempfile.mkdtemp()
    yield path
    shutil.rmtree(path)


@pytest.fixture()
def base_app(instance_path):
    """Flask application fixture."""
    app_ = Flask('testapp', instance_path=instance_path)
    app_.config.update(
        TESTING=True,
    )
    PriorRewiring(app_)
    return app_


@pytest.fixture()
def app(base_app):
    """Flask application fixture."""
    with base_app.app_context():
        yield base_app


@pytest.fixture()
def cli_runner(base_app):
    """Runner invoking ``flask rewiring`` commands."""
    runner = base_app.test_cli_runner()

    def invoke(*args, **kwargs):
        return runner.invoke(args=['rewiring'] + list(args), **kwargs)

    return invoke


def make_path(n):
    """Path ``0 - 1 - ... - n-1``."""
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def make_cycle(n):
    """Cycle on ``n`` nodes."""
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def make_star(leaves):
    """Star with centre 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


@pytest.fixture()
def path3():
    """Path on three nodes."""
    return make_path(3)


@pytest.fixture()
def cycle4():
    """Four-cycle."""
    return make_cycle(4)


@pytest.fixture()
def coloured_graph():
    """Seven-node path with colour classes of size 3 and 2, two uncoloured."""
    return Graph(7, [(i, i + 1) for i in range(6)],
                 colours={0: 0, 2: 0, 4: 0, 1: 1, 5: 1})


@pytest.fixture()
def tiny_config(instance_path):
    """Data A experiment small enough to train in seconds."""
    return ExperimentConfig(
        'a', train_count=12, eval_count=6, train_size_range=(8, 10),
        eval_size_range=(10, 12), total_epochs=2, warmup_epochs=1,
        batch_size=4, distance=3, scale=1.0, epoch_scale=1.0,
        num_layers=2, hidden_channels=4, seeds=(0, 1),
        output_dir=instance_path)


@pytest.fixture()
def tiny_config_b(instance_path):
    """Data B experiment small enough to train in seconds."""
    return ExperimentConfig(
        'b', train_count=8, eval_count=4, train_size_range=(10, 12),
        eval_size_range=(12, 14), coloured_range=(4, 8), total_epochs=2,
        warmup_epochs=1, batch_size=4, scale=1.0, epoch_scale=1.0,
        num_layers=2, hidden_channels=4, seeds=(0,),
        output_dir=instance_path)
