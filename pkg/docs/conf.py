#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# autocatlib documentation build configuration file.
#
# The api pages are regenerated from the package on every build, the rest of the
# pages include the top level rst files of the repository.

import os
import sys

import sphinx.ext.apidoc
import sphinx_rtd_theme

project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sphinx.ext.apidoc.main(['-f', '-o', os.path.join(project_root, 'docs'),
                        os.path.join(project_root, 'autocatlib')])
sys.path.insert(0, project_root)

import autocatlib  # noqa: E402  pylint: disable=wrong-import-position

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx.ext.mathjax',
]
napoleon_google_docstring = True
autodoc_member_order = 'bysource'

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'''autocatlib'''
copyright = u'''2026, autocatlib developers'''  # pylint: disable=redefined-builtin
version = autocatlib.__version__
release = autocatlib.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
htmlhelp_basename = '''autocatlibdoc'''

latex_documents = [
    ('index', '''autocatlib.tex''',
     u'''autocatlib Documentation''',
     u'''autocatlib developers''', 'manual'),
]
man_pages = [
    ('index', '''autocatlib''',
     u'''autocatlib Documentation''',
     [u'''autocatlib developers'''], 1)
]
