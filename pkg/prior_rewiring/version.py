# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Version information for prior-rewiring.

This file is imported by ``prior_rewiring.__init__``,
and parsed by ``setup.py``.
"""

__version__ = '0.1.0.dev20261017'
