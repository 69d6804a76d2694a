"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
"""

import argparse
from hermkl.asserts import enable_rich_assert
from hermkl.closedform import r_poly_closed
from hermkl.const import EXIT_FAILURE
from hermkl.io import OutputFormat, PolynomialRecord, RPolynomialMethod
from hermkl.oracle import WeylGroup
from hermkl.scripts import arguments as ap
import logging
import sys


def init_parser(subparsers: argparse._SubParsersAction) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(
        "rpoly",
        description="""
Compute the relative R-polynomial R_{u,v} (x = -1) of two elements of a
Hermitian symmetric quotient, given as shapes (comma-separated row lengths).

            CLOSED evaluate the closed form on the marked skew diagram

            ORACLE run Deodhar's recursion on the Weyl group

              BOTH run both and report MATCH or MISMATCH. A mismatch exits
                   with status 1.

JSON output holds the coefficients in ascending order. LATEX output factors
out powers of q and of (q-1).
""",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        help="Compute a relative R-polynomial.",
    )
    ap.add_pair_arguments(parser)

    advanced = parser.add_argument_group("advanced arguments")
    advanced.add_argument(
        "--method",
        type=str,
        help=f'''Choose how to compute. See description for more details.
        Default: "{RPolynomialMethod.CLOSED.name}"''',
        default=RPolynomialMethod.CLOSED.name,
        choices=[m.name for m in list(RPolynomialMethod)],
    )
    ap.add_format_option(advanced)

    parser = ap.add_version_option(parser)
    parser.set_defaults(parse=parse_arguments, run=run)

    return parser


@enable_rich_assert
def parse_arguments(args: argparse.Namespace) -> argparse.Namespace:
    args = ap.parse_pair(args)
    args.method = RPolynomialMethod[args.method]
    args.format = OutputFormat[args.format]
    return args


@enable_rich_assert
def run(args: argparse.Namespace) -> None:
    records = []
    if args.method in (RPolynomialMethod.CLOSED, RPolynomialMethod.BOTH):
        value = r_poly_closed(args.u, args.v).value
        records.append(
            PolynomialRecord(str(args.spec), str(args.u), str(args.v), "closed", value)
        )
    if args.method in (RPolynomialMethod.ORACLE, RPolynomialMethod.BOTH):
        group = WeylGroup.from_spec(args.spec)
        u = group.element_of_shape(args.u)
        v = group.element_of_shape(args.v)
        value = group.r_poly(u, v)
        records.append(
            PolynomialRecord(str(args.spec), str(args.u), str(args.v), "oracle", value)
        )

    for record in records:
        if RPolynomialMethod.BOTH == args.method and OutputFormat.JSON != args.format:
            print(f"{record.method}: {record.render(args.format)}")
        else:
            print(record.render(args.format))

    if RPolynomialMethod.BOTH == args.method:
        match = records[0].poly == records[1].poly
        if OutputFormat.JSON != args.format:
            print("MATCH" if match else "MISMATCH")
        if not match:
            logging.error("The closed form and the oracle disagree.")
            sys.exit(EXIT_FAILURE)
    logging.info("That's all! :smiley:")
