# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Utilities for prior-rewiring."""

from flask import current_app, has_app_context

from . import config


def setting(name):
    """Setting ``PRIOR_REWIRING_<name>`` from the app or the defaults.

    Outside an application context the module defaults in
    :mod:`prior_rewiring.config` apply.
    """
    key = 'PRIOR_REWIRING_' + name
    if has_app_context() and key in current_app.config:
        return current_app.config[key]
    return getattr(config, key)
