"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
"""

from hermkl.scripts import arguments
from hermkl.scripts import hkl_rpoly, hkl_klpoly, hkl_verify
from hermkl.scripts import hkl_hasse, hkl_marks, hkl_invariance

import logging
from rich.console import Console  # type: ignore
from rich.logging import RichHandler  # type: ignore

logging.basicConfig(
    level=logging.INFO,
    format="%(message)s",
    handlers=[
        RichHandler(console=Console(stderr=True), markup=True, rich_tracebacks=True)
    ],
)

__all__ = [
    "arguments",
    "hkl_hasse",
    "hkl_invariance",
    "hkl_klpoly",
    "hkl_marks",
    "hkl_rpoly",
    "hkl_verify",
]
