# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Application factory used by the stand-alone command line."""

from flask import Flask

from .ext import PriorRewiring


def create_app(**config):
    """Create a Flask application with the extension loaded.

    :param config: Extra configuration values.
    """
    app = Flask('prior_rewiring')
    app.config.update(config)
    PriorRewiring(app)
    return app
