# Sphinx configuration for the tiltwall documentation.
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import sys
from pathlib import Path

sys.path.insert(0, Path(__file__).resolve().parents[2].as_posix())
from tiltwall import __version__

# -- Project information -----------------------------------------------------

project = "tiltwall"
copyright = "2024, tiltwall developers"
author = "tiltwall developers"

version = __version__
release = __version__

# -- General configuration ---------------------------------------------------

extensions = ["sphinx.ext.autodoc", "sphinx.ext.intersphinx", "sphinx_autodoc_typehints"]

# Fraction and the enums render as links to the Python docs
intersphinx_mapping = {"python": ("https://docs.python.org/3", None)}

autodoc_member_order = "bysource"
autodoc_mock_imports = ["matplotlib"]

typehints_use_signature = True
typehints_use_signature_return = True

source_suffix = ".rst"
master_doc = "index"
exclude_patterns = ["_build"]

html_theme = "sphinx_rtd_theme"
html_title = f"tiltwall {version}"
