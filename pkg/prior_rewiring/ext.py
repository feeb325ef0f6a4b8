# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Flask extension for prior-rewiring."""

import os

from . import config
from .cli import rewiring
from .errors import ConfigError


class PriorRewiring(object):
    """prior-rewiring extension."""

    def __init__(self, app=None):
        """Extension initialization.

        :param app: The Flask application. (Default: ``None``)
        """
        if app:
            self.init_app(app)

    def init_app(self, app):
        """Flask application initialization.

        :param app: The Flask application.
        """
        self.init_config(app)
        app.cli.add_command(rewiring)
        app.extensions['prior-rewiring'] = self

    def init_config(self, app):
        """Initialize configuration.

        :param app: The Flask application.
        """
        workers = os.environ.get('PRIOR_REWIRING_SWEEP_WORKERS')
        if workers:
            try:
                workers = int(workers)
            except ValueError:
                raise ConfigError('invalid PRIOR_REWIRING_SWEEP_WORKERS '
                                  '{!r}'.format(workers))
            app.config.setdefault('PRIOR_REWIRING_SWEEP_WORKERS', workers)
        for k in dir(config):
            if k.startswith('PRIOR_REWIRING_'):
                app.config.setdefault(k, getattr(config, k))
