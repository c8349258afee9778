# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""tropsing documentation build configuration file.

This file is executed with the current directory set to its containing dir.
"""
import os
import sys

import sphinx_rtd_theme

sys.path.insert(0, os.path.abspath(".."))

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.intersphinx",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    "sphinxcontrib.programoutput",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = "tropsing"
copyright = "The tropsing Developers"
author = "The tropsing Developers"

# The short X.Y version.
version = "0.3.0"
# The full version, including alpha/beta/rc tags.
release = "0.3.0"

language = None
exclude_patterns = ["_build"]
pygments_style = "sphinx"
todo_include_todos = False

html_theme = "sphinx_rtd_theme"
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
htmlhelp_basename = "tropsingdoc"

latex_documents = [
    (master_doc, "tropsing.tex", "tropsing Documentation", author, "manual"),
]

man_pages = [(master_doc, "tropsing", "tropsing Documentation", [author], 1)]

texinfo_documents = [
    (
        master_doc,
        "tropsing",
        "tropsing Documentation",
        author,
        "tropsing",
        "Exact singularity tests for tropical polynomials.",
        "Miscellaneous",
    ),
]

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "sympy": ("https://docs.sympy.org/latest", None),
}

autodoc_member_order = "bysource"
