# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Sphinx configuration."""

import os

# -- General configuration ------------------------------------------------

# Do not warn on external images.
suppress_warnings = ['image.nonlocal_uri']

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

# General information about the project.
project = u'Prior-Rewiring'
copyright = u'2026, Prior-Rewiring contributors'
author = u'Prior-Rewiring contributors'

# Get the version string. Cannot be done with import!
g = {}
with open(os.path.join(os.path.dirname(__file__), '..',
                       'prior_rewiring', 'version.py'),
          'rt') as fp:
    exec(fp.read(), g)
    version = g['__version__']

# The full version, including alpha/beta/rc tags.
release = version

exclude_patterns = []

pygments_style = 'sphinx'

todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'

html_theme_options = {
    'description': 'Prior-informed graph rewiring for message-passing '
                   'neural networks.',
    'show_powered_by': False,
}

html_sidebars = {
    '**': [
        'about.html',
        'navigation.html',
        'relations.html',
        'searchbox.html',
    ]
}

htmlhelp_basename = 'prior-rewiring_namedoc'

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'prior-rewiring', u'Prior-Rewiring Documentation',
     [author], 1)
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'torch': ('https://pytorch.org/docs/stable/', None),
    'flask': ('https://flask.palletsprojects.com/en/latest/', None),
}

autoclass_content = 'both'
