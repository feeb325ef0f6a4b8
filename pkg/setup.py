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

import os

from setuptools import find_packages, setup

readme = open('README.rst').read()
history = open('CHANGES.rst').read()

tests_require = [
    'Sphinx>=4.0',
    'check-manifest>=0.25',
    'coverage>=5.0',
    'hypothesis>=6.0',
    'isort>=5.0',
    'networkx>=2.6',
    'pydocstyle>=6.0',
    'pytest-cov>=3.0',
    'pytest>=7.0',
]

extras_require = {
    'docs': [
        'Sphinx>=4.0',
    ],
    'tests': tests_require,
}

extras_require['all'] = []
for reqs in extras_require.values():
    extras_require['all'].extend(reqs)

install_requires = [
    'Flask>=2.2',
    'click>=8.0',
    'matplotlib>=3.5',
    'numpy>=1.22',
    'scipy>=1.8',
    'torch>=2.0',
]

packages = find_packages(exclude=['tests', 'tests.*', 'examples',
                                  'examples.*'])


# Get the version string. Cannot be done with import!
g = {}
with open(os.path.join('prior_rewiring', 'version.py'), 'rt') as fp:
    exec(fp.read(), g)
    version = g['__version__']

setup(
    name='prior-rewiring',
    version=version,
    description=__doc__,
    long_description=readme + '\n\n' + history,
    keywords='graph rewiring expander cayley gnn',
    license='GPLv2',
    author='Prior-Rewiring contributors',
    packages=packages,
    zip_safe=False,
    include_package_data=True,
    platforms='any',
    python_requires='>=3.8',
    entry_points={
        'console_scripts': [
            'prior-rewiring = prior_rewiring.cli:main',
        ],
        'flask.commands': [
            'rewiring = prior_rewiring.cli:rewiring',
        ],
    },
    extras_require=extras_require,
    install_requires=install_requires,
    tests_require=tests_require,
    classifiers=[
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v2 (GPLv2)',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Artificial Intelligence',
        'Development Status :: 3 - Alpha',
    ],
)
