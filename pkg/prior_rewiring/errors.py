# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Errors raised by prior-rewiring."""


class PriorRewiringError(Exception):
    """Base class of every error raised by this package."""


class GraphError(PriorRewiringError, ValueError):
    """Invalid graph, node index or distance."""


class EdgeListError(PriorRewiringError):
    """Malformed edge-list or dataset file."""

    def __init__(self, message, filename=None, lineno=None):
        """Initialize the error.

        :param message: What went wrong.
        :param filename: The file being parsed. (Default: ``None``)
        :param lineno: 1-based line number. (Default: ``None``)
        """
        self.filename = filename
        self.lineno = lineno
        where = ''
        if filename is not None:
            where = '{}:'.format(filename)
            if lineno is not None:
                where += '{}:'.format(lineno)
            where += ' '
        super(EdgeListError, self).__init__(where + message)


class CayleyError(PriorRewiringError, ValueError):
    """Invalid Cayley graph parameter."""


class AlignmentError(PriorRewiringError, ValueError):
    """Graphs cannot be aligned."""


class RewireError(PriorRewiringError, ValueError):
    """A rewiring cannot be built for the given graph."""


class TopologyError(PriorRewiringError):
    """No base topology is available for a size bin."""


class DatasetError(PriorRewiringError, ValueError):
    """Invalid dataset parameters or sample."""


class ModelError(PriorRewiringError, ValueError):
    """Shape or schedule mismatch in the model."""


class TrainingError(PriorRewiringError):
    """Training diverged."""


class ConfigError(PriorRewiringError, ValueError):
    """Invalid experiment configuration."""
