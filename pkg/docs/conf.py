# Configuration file for the Sphinx documentation builder.
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

source_suffix = {
    '.rst': 'restructuredtext',
    '.md': 'markdown',
}

# -- Project information -----------------------------------------------------

project = 'libkovalevskaya'
copyright = '2026, libkovalevskaya developers'
author = 'libkovalevskaya developers'
release = "0.1.0"

# -- General configuration ---------------------------------------------------

extensions = [
   'sphinx.ext.autodoc',
   'sphinx.ext.coverage',
   'sphinx.ext.napoleon',
   'recommonmark'
]

templates_path = ['_templates']
exclude_patterns = ['requirements.txt', 'venv', '../venv', '../examples', '_build']
master_doc = 'index'

# The API pages are built without the numerical stack installed
autodoc_mock_imports = [
    "tensorflow",
    "tensorflow_probability",
    "numpy",
    "scipy",
    "networkx",
    "plotly",
    "colorlover",
    "kaleido",
    "matplotlib",
]

# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"
html_static_path = ['_static']
