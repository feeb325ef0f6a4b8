# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Module tests."""

import pytest
from flask import Flask

from prior_rewiring import PriorRewiring
from prior_rewiring.errors import ConfigError


def test_version():
    """Test version import."""
    from prior_rewiring import __version__
    assert __version__


def test_init():
    """Test extension initialization."""
    app = Flask('testapp')
    ext = PriorRewiring(app)
    assert 'prior-rewiring' in app.extensions

    app = Flask('testapp')
    ext = PriorRewiring()
    assert 'prior-rewiring' not in app.extensions
    ext.init_app(app)
    assert 'prior-rewiring' in app.extensions
    assert 'rewiring' in app.cli.commands


def test_init_config_defaults():
    """Defaults are set without overriding explicit values."""
    app = Flask('testapp')
    app.config['PRIOR_REWIRING_SEEDS'] = (7,)
    PriorRewiring(app)
    assert app.config['PRIOR_REWIRING_SEEDS'] == (7,)
    assert app.config['PRIOR_REWIRING_HIDDEN_CHANNELS'] == 8
    assert app.config['PRIOR_REWIRING_DATA_A_DEFAULTS']['DISTANCE'] == 5


def test_workers_from_environment(monkeypatch):
    """The environment sets the worker count unless configured."""
    monkeypatch.setenv('PRIOR_REWIRING_SWEEP_WORKERS', '3')
    app = Flask('testapp')
    PriorRewiring(app)
    assert app.config['PRIOR_REWIRING_SWEEP_WORKERS'] == 3


def test_create_app():
    """The stand-alone application loads the extension."""
    from prior_rewiring.factory import create_app
    app = create_app(PRIOR_REWIRING_SCALE=1.0)
    assert 'prior-rewiring' in app.extensions
    assert app.config['PRIOR_REWIRING_SCALE'] == 1.0


def test_invalid_workers_in_environment(monkeypatch):
    """A malformed worker count is a configuration error."""
    monkeypatch.setenv('PRIOR_REWIRING_SWEEP_WORKERS', 'many')
    with pytest.raises(ConfigError):
        PriorRewiring(Flask('testapp'))
