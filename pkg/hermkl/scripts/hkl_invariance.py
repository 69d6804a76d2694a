"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
"""

import argparse
from hermkl.asserts import enable_rich_assert
from hermkl.const import EXIT_FAILURE
from hermkl.invariance import invariance_report
from hermkl.io import OutputFormat
from hermkl.scripts import arguments as ap
import json
import logging
from rich.console import Console  # type: ignore
from rich.table import Table  # type: ignore
import sys


def init_parser(subparsers: argparse._SubParsersAction) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(
        "invariance",
        description="""
Check combinatorial invariance: all intervals up to the given length are
grouped by isomorphism type of their Bruhat poset, and each class must carry a
single R-polynomial and a single Kazhdan-Lusztig polynomial. Intervals of all
given quotients are pooled. Violations exit with status 1.
""",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        help="Check combinatorial invariance of the polynomials.",
    )
    parser.add_argument(
        "specs",
        type=str,
        nargs="+",
        help="""Quotients: A:<n>:<p>, B:<n>, C:<n>, DA:<n>, DD:<n>, E6 or E7.""",
    )
    parser.add_argument(
        "--max-length",
        type=int,
        required=True,
        help="""Longest interval to consider.""",
    )

    advanced = parser.add_argument_group("advanced arguments")
    ap.add_format_option(advanced, (OutputFormat.TEXT, OutputFormat.JSON))
    ap.add_threads_option(advanced)

    parser = ap.add_version_option(parser)
    parser.set_defaults(parse=parse_arguments, run=run)

    return parser


@enable_rich_assert
def parse_arguments(args: argparse.Namespace) -> argparse.Namespace:
    args = ap.parse_specs(args)
    args = ap.parse_threads(args)
    assert args.max_length >= 1, f"positive length expected, got {args.max_length}"
    args.format = OutputFormat[args.format]
    return args


@enable_rich_assert
def run(args: argparse.Namespace) -> None:
    report = invariance_report(args.specs, args.max_length, args.t)

    if OutputFormat.JSON == args.format:
        print(json.dumps(report.to_dict()))
    else:
        table = Table(title="Combinatorial invariance")
        table.add_column("Quotients")
        table.add_column("Intervals", justify="right")
        table.add_column("Classes", justify="right")
        table.add_column("Violations", justify="right")
        table.add_row(
            " ".join(str(s) for s in report.quotients),
            str(report.intervals),
            str(len(report.classes)),
            str(len(report.violations)),
        )
        Console().print(table)

        classes = Table(title="Isomorphism classes")
        classes.add_column("Length", justify="right")
        classes.add_column("Size", justify="right")
        classes.add_column("Representative")
        classes.add_column("R")
        classes.add_column("P")
        for interval_class in sorted(
            report.classes, key=lambda c: (c.poset.length, -c.size)
        ):
            first = interval_class.representative
            shared = interval_class.consistent
            classes.add_row(
                str(interval_class.poset.length),
                str(interval_class.size),
                f"{first.spec} ({first.inner})<({first.outer})",
                str(first.r_poly) if shared else "-",
                str(first.kl_poly) if shared else "-",
            )
        Console().print(classes)

        for interval_class in report.violations:
            members = ", ".join(
                f"{m.spec} ({m.inner})<({m.outer})" for m in interval_class.members
            )
            r_polys = "; ".join(str(p) for p in interval_class.r_polys)
            kl_polys = "; ".join(str(p) for p in interval_class.kl_polys)
            print(f"{members}: R in {{{r_polys}}}, P in {{{kl_polys}}}")

    if not report.ok:
        logging.error("Isomorphic intervals carry different polynomials.")
        sys.exit(EXIT_FAILURE)
    logging.info("That's all! :smiley:")
