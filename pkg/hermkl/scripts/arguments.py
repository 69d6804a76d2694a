"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
"""

import argparse
from hermkl import __version__
from hermkl.diagrams import QuotientSpec, ShapeDiagram, ambient
from hermkl.io import OutputFormat
import multiprocessing as mp
import sys


def add_version_option(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser.add_argument(
        "--version", action="version", version=f"{sys.argv[0]} {__version__}"
    )
    return parser


def add_pair_arguments(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser.add_argument(
        "spec",
        type=str,
        help="""Quotient: A:<n>:<p>, B:<n>, C:<n>, DA:<n>, DD:<n>, E6 or E7.""",
    )
    parser.add_argument(
        "-u",
        type=str,
        default="",
        help="""Row lengths of the lower shape, e.g. 3,2. Default: "" (identity)""",
    )
    parser.add_argument(
        "-v",
        type=str,
        required=True,
        help="""Row lengths of the upper shape, e.g. 5,4,4,4,1.""",
    )
    return parser


def add_format_option(parser, choices=tuple(OutputFormat)) -> argparse.ArgumentParser:
    parser.add_argument(
        "--format",
        type=str,
        help=f'''Output format. Default: "{OutputFormat.TEXT.name}"''',
        default=OutputFormat.TEXT.name,
        choices=[m.name for m in choices],
    )
    return parser


def add_threads_option(parser) -> None:
    parser.add_argument(
        "-t", type=int, default=1, help="""Number of threads for parallelization."""
    )


def parse_pair(args: argparse.Namespace) -> argparse.Namespace:
    args.spec = QuotientSpec.from_str(args.spec)
    diagram = ambient(args.spec)
    args.u = ShapeDiagram.from_str(diagram, args.u)
    args.v = ShapeDiagram.from_str(diagram, args.v)
    return args


def parse_specs(args: argparse.Namespace) -> argparse.Namespace:
    args.specs = [QuotientSpec.from_str(s) for s in args.specs]
    return args


def parse_threads(args: argparse.Namespace) -> argparse.Namespace:
    assert args.t >= 1, f"at least one thread is needed, got {args.t}"
    args.t = max(1, min(args.t, mp.cpu_count()))
    return args
