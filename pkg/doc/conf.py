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
#
# LinePack documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# make the package importable without installation
sys.path.insert(0, os.path.abspath('..'))


# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.todo',
    'sphinx.ext.napoleon',
    'sphinx.ext.mathjax',
    'sphinx.ext.coverage',
    'sphinx.ext.viewcode',
    'sphinx.ext.autosummary',
]

# Add any paths that contain templates here, relative to this directory.
templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'LinePack'
copyright = u'2019-2026, LinePack Dev Team'
author = u'LinePack Dev Team'

# The short X.Y version.
version = u'0.1'
# The full version, including alpha/beta/rc tags.
release = u'0.1.0'

language = None

exclude_patterns = ['_build']

pygments_style = 'sphinx'

todo_include_todos = True


# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_show_sourcelink = False

htmlhelp_basename = 'LinePackdoc'


# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}

latex_documents = [
    (master_doc, 'LinePack.tex', u'LinePack Documentation',
     u'LinePack Dev Team', 'manual'),
]


# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'linepack', u'LinePack Documentation',
     [author], 1)
]


# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
    (master_doc, 'LinePack', u'LinePack Documentation',
     author, 'LinePack', 'Packings of lines in real and complex projective space.',
     'Miscellaneous'),
]


# -- Autodoc --------------------------------------------------------------

autoclass_content = 'both'
autodoc_member_order = 'bysource'
autosummary_generate = ['tech_api.rst']
