#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# qslab documentation build configuration file.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

import qslab

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.doctest',
    'sphinx_autodoc_typehints',
]

intersphinx_mapping = {'python': ('https://docs.python.org/3.9', None)}

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'qslab'
copyright = '2024, ' + qslab.__author__
author = qslab.__author__

version = qslab.__version__
release = qslab.__version__

language = 'en'
exclude_patterns = ['_build']
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_static_path = []
htmlhelp_basename = 'qslabdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}

latex_documents = [
    (master_doc, 'qslab.tex', 'qslab Documentation', qslab.__author__, 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'qslab', 'qslab Documentation', [author], 1)
]

# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
    (master_doc, 'qslab', 'qslab Documentation', author, 'qslab', qslab.__description__,
     'Miscellaneous'),
]
