#!/usr/bin/env python
# -*- coding: utf-8 -*-
# LinePack is a toolkit for finding, certifying and cataloguing
# packings of lines in real and complex projective space.
#
# Copyright (C) 2019-2026 The LinePack Development Team
#
# This file is part of LinePack.
#
# LinePack is free software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License
# as published by the Free Software Foundation; either version 3
# of the License, or (at your option) any later version.
#
# LinePack is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, see <http://www.gnu.org/licenses/>
#
# --
# pragma pylint: disable=superfluous-parens

from setuptools import setup, find_packages

setup(
    name='linepack',
    version='0.1.0',
    description='Finding, Certifying and Cataloguing Packings of Lines in Projective Space',
    author='LinePack Dev Team',
    package_dir={'linepack': 'linepack'},
    packages=find_packages(include=['linepack', 'linepack.*']),
    package_data={'linepack.data': ['*.txt']},
    entry_points={
        'console_scripts': ['linepack = linepack.scripts.main:main'],
    },
    python_requires='>=3.8',
    classifiers=[
        'Environment :: Console', 'Intended Audience :: Science/Research',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],
    install_requires=[
        'numpy>=1.17', 'scipy>=1.5', 'sympy', 'matplotlib',
        'importlib_resources; python_version < "3.9"',
    ],
    extras_require={
        'test': [
            'pytest',
        ],
        'doc': [
            'sphinx',
            'sphinx_rtd_theme',
        ],
        'dev': [
            'pytest',
            'pylint',
            'pycodestyle',
            'pydocstyle',
            'coverage',
        ]
    }
)
