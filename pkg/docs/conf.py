#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# TempEuler documentation build configuration file.

import sphinx_rtd_theme

extensions = []

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'TempEuler'
copyright = '2026, The TempEuler developers'
author = 'The TempEuler developers'

# The short X.Y version, and the full version.  Keep in step with
# tempeuler/__init__.py
version = '0.9'
release = '0.9.0'

language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
todo_include_todos = False

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
html_static_path = ['_static']
html_sidebars = { '**': ['localtoc.html', 'relations.html', 'sourcelink.html', 'searchbox.html'] }
htmlhelp_basename = 'TempEulerdoc'

latex_documents = [
    (master_doc, 'TempEuler.tex', 'TempEuler Documentation',
     author, 'manual'),
]

man_pages = [
    (master_doc, 'tempeuler', 'TempEuler Documentation',
     [author], 1)
]
