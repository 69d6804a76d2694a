"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
"""

import argparse
from hermkl import __version__
from hermkl.scripts import arguments as ap
from hermkl import scripts
import sys
from typing import List, Optional


def default_parser(*args) -> None:
    print("hkl -h for usage details.")
    sys.exit()


def main(argv: Optional[List[str]] = None) -> None:
    parser = argparse.ArgumentParser(
        description=f"""
Version:    {__version__}
Author:     Gabriele Girelli
Docs:       http://ggirelli.github.io/hermkl
Code:       http://github.com/ggirelli/hermkl

Relative R-polynomials and Kazhdan-Lusztig polynomials of Hermitian symmetric
quotients, from marked skew diagrams.
""",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.set_defaults(parse=default_parser)
    parser = ap.add_version_option(parser)

    subparsers = parser.add_subparsers(
        title="sub-commands",
        help="Access the help page for a sub-command with: sub-command -h",
    )

    scripts.hkl_rpoly.init_parser(subparsers)
    scripts.hkl_klpoly.init_parser(subparsers)
    scripts.hkl_verify.init_parser(subparsers)
    scripts.hkl_hasse.init_parser(subparsers)
    scripts.hkl_marks.init_parser(subparsers)
    scripts.hkl_invariance.init_parser(subparsers)

    args = parser.parse_args(argv)
    args = args.parse(args)
    args.run(args)
