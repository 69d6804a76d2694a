"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
"""

from hermkl import asserts, const, poly
from hermkl import diagrams, oracle, sorting
from hermkl import invariance, closedform, io
from importlib.metadata import version, PackageNotFoundError

try:
    __version__ = version(__name__)
except PackageNotFoundError:
    __version__ = "0.0.0"

__all__ = [
    "__version__",
    "asserts",
    "closedform",
    "const",
    "diagrams",
    "invariance",
    "io",
    "oracle",
    "poly",
    "sorting",
]
