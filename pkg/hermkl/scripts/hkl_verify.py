"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
"""

import argparse
from hermkl.asserts import enable_rich_assert
from hermkl.closedform import verify_quotient
from hermkl.const import EXIT_FAILURE
from hermkl.scripts import arguments as ap
from joblib import Parallel, delayed  # type: ignore
import logging
from rich.console import Console  # type: ignore
from rich.table import Table  # type: ignore
import sys


def init_parser(subparsers: argparse._SubParsersAction) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(
        "verify",
        description="""
Compare the closed form with Deodhar's recursion on every pair u <= v of each
quotient. A table of pair and mismatch counts is printed, followed by the
mismatching pairs sorted by (l(u), u, l(v), v). Any mismatch exits with
status 1.
""",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        help="Verify the closed form against the oracle.",
    )
    parser.add_argument(
        "specs",
        type=str,
        nargs="+",
        help="""Quotients: A:<n>:<p>, B:<n>, C:<n>, DA:<n>, DD:<n>, E6 or E7.""",
    )

    advanced = parser.add_argument_group("advanced arguments")
    ap.add_threads_option(advanced)

    parser = ap.add_version_option(parser)
    parser.set_defaults(parse=parse_arguments, run=run)

    return parser


@enable_rich_assert
def parse_arguments(args: argparse.Namespace) -> argparse.Namespace:
    args = ap.parse_specs(args)
    args = ap.parse_threads(args)
    return args


@enable_rich_assert
def run(args: argparse.Namespace) -> None:
    if 1 == args.t:
        results = [verify_quotient(spec) for spec in args.specs]
    else:
        results = Parallel(n_jobs=args.t, verbose=11)(
            delayed(verify_quotient)(spec, False) for spec in args.specs
        )

    table = Table(title="Closed form against oracle")
    table.add_column("Quotient")
    table.add_column("Pairs", justify="right")
    table.add_column("Mismatches", justify="right")
    for result in results:
        table.add_row(str(result.spec), str(result.pairs), str(len(result.mismatches)))
    Console().print(table)

    failed = False
    for result in results:
        for m in result.mismatches:
            failed = True
            print(
                f"{result.spec} u=({m.inner}) v=({m.outer}) "
                + f"closed={m.closed} oracle={m.oracle}"
            )

    if failed:
        logging.error("The closed form disagrees with the oracle.")
        sys.exit(EXIT_FAILURE)
    logging.info("That's all! :smiley:")
