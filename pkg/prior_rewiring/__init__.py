# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Prior-informed graph rewiring for message-passing neural networks."""

from .ext import PriorRewiring
from .version import __version__

__all__ = ('__version__', 'PriorRewiring')
