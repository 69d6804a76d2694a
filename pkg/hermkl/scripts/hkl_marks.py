"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
"""

import argparse
from hermkl.asserts import enable_rich_assert
from hermkl.closedform import mark
from hermkl.io import render_marks
from hermkl.scripts import arguments as ap
import logging


def init_parser(subparsers: argparse._SubParsersAction) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(
        "marks",
        description="""
Print the marked skew diagram of a pair u <= v as a fixed-width grid:

         X box of the inner shape
         + Plus-marked skew box
         - Minus-marked skew box
         . unmarked skew box
         _ ambient box outside the outer shape

The tables of delta (same-label boxes weakly northwest) and Delta (quantum
integer argument) follow the grid.
""",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        help="Show the marking of a skew diagram.",
    )
    ap.add_pair_arguments(parser)

    parser = ap.add_version_option(parser)
    parser.set_defaults(parse=parse_arguments, run=run)

    return parser


@enable_rich_assert
def parse_arguments(args: argparse.Namespace) -> argparse.Namespace:
    return ap.parse_pair(args)


@enable_rich_assert
def run(args: argparse.Namespace) -> None:
    print(render_marks(mark(args.u, args.v)))
    logging.info("That's all! :smiley:")
