# -*- coding: utf-8 -*-
#
# pyagree documentation build configuration file
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# make the package importable without installing it
sys.path.insert(0, os.path.abspath('../..'))

import pyagree

# -- General configuration ------------------------------------------------

needs_sphinx = '1.3'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'pyagree'
copyright = u'2026, The PyAgree developers'
author = u'The PyAgree developers'

version = pyagree.__version__
release = pyagree.__version__

language = 'en'
exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = True

# -- Options for HTML output ----------------------------------------------

import sphinx_rtd_theme

html_theme = 'sphinx_rtd_theme'
html_static_path = []
htmlhelp_basename = 'pyagreedoc'

# -- Options for other output formats -------------------------------------

latex_documents = [
    (master_doc, 'pyagree.tex', u'pyagree Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'pyagree', u'pyagree Documentation', [author], 1)
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None),
                       'numpy': ('https://numpy.org/doc/stable/', None),
                       'scipy': ('https://docs.scipy.org/doc/scipy/', None)}
