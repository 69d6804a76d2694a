"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
"""

import argparse
from hermkl.asserts import enable_rich_assert
from hermkl.diagrams import QuotientSpec
from hermkl.io import write_dot
from hermkl.scripts import arguments as ap
import logging
import os


def init_parser(subparsers: argparse._SubParsersAction) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(
        "hasse",
        description="""
Write the Hasse diagram of the Bruhat order of a quotient as a DOT digraph.
Nodes are shapes, labeled with their row lengths and rank. Edges are covering
relations, i.e., the addition of one box.
""",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        help="Export the Bruhat order of a quotient.",
    )
    parser.add_argument(
        "spec",
        type=str,
        help="""Quotient: A:<n>:<p>, B:<n>, C:<n>, DA:<n>, DD:<n>, E6 or E7.""",
    )
    parser.add_argument(
        "--dot", type=str, required=True, help="""Path to output DOT file."""
    )

    parser = ap.add_version_option(parser)
    parser.set_defaults(parse=parse_arguments, run=run)

    return parser


@enable_rich_assert
def parse_arguments(args: argparse.Namespace) -> argparse.Namespace:
    args.spec = QuotientSpec.from_str(args.spec)
    folder = os.path.dirname(os.path.abspath(args.dot))
    assert os.path.isdir(folder), f"output folder not found: '{folder}'"
    return args


@enable_rich_assert
def run(args: argparse.Namespace) -> None:
    write_dot(args.spec, args.dot)
    logging.info(f"Written to '{args.dot}'.")
    logging.info("That's all! :smiley:")
