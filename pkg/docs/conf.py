# Sphinx configuration of the lockerutils documentation

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

project = 'lockerutils'
copyright = '2026, lockerutils developers'
author = 'lockerutils developers'

with open(os.path.join(os.path.dirname(__file__), '..', 'VERSION'), encoding='utf-8') as fid:
    version = fid.read().strip()
release = version

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.napoleon',
              'sphinx.ext.doctest',
              'sphinx.ext.autosectionlabel',
              'sphinx_autodoc_typehints',
              'sphinxarg.ext']

napoleon_include_private_with_doc = False
autosectionlabel_prefix_document = True

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

html_theme = 'sphinx_rtd_theme'
