"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
"""

import argparse
from hermkl.asserts import enable_rich_assert
from hermkl.closedform import r_poly_closed
from hermkl.io import OutputFormat, PolynomialRecord
from hermkl.oracle import GroupElement, WeylGroup
from hermkl.poly import Polynomial
from hermkl.scripts import arguments as ap
import logging


def init_parser(subparsers: argparse._SubParsersAction) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(
        "klpoly",
        description="""
Compute the relative Kazhdan-Lusztig polynomial P_{u,v} of two elements of a
Hermitian symmetric quotient, by inverting the R-polynomials of the interval.

         MINUS_ONE R-polynomials come from the closed form

                 Q R-polynomials come from Deodhar's recursion with x = q
""",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        help="Compute a relative Kazhdan-Lusztig polynomial.",
    )
    ap.add_pair_arguments(parser)

    advanced = parser.add_argument_group("advanced arguments")
    advanced.add_argument(
        "--x",
        type=str,
        help=f'''Choose the parameter x. See description for more details.
        Default: "{WeylGroup.XParameter.MINUS_ONE.name}"''',
        default=WeylGroup.XParameter.MINUS_ONE.name,
        choices=[m.name for m in list(WeylGroup.XParameter)],
    )
    ap.add_format_option(advanced)

    parser = ap.add_version_option(parser)
    parser.set_defaults(parse=parse_arguments, run=run)

    return parser


@enable_rich_assert
def parse_arguments(args: argparse.Namespace) -> argparse.Namespace:
    args = ap.parse_pair(args)
    args.x = WeylGroup.XParameter[args.x]
    args.format = OutputFormat[args.format]
    return args


@enable_rich_assert
def run(args: argparse.Namespace) -> None:
    group = WeylGroup.from_spec(args.spec)
    u = group.element_of_shape(args.u)
    v = group.element_of_shape(args.v)

    if WeylGroup.XParameter.MINUS_ONE == args.x:

        def closed(a: GroupElement, b: GroupElement) -> Polynomial:
            inner = group.shape_of_element(a)
            outer = group.shape_of_element(b)
            return r_poly_closed(inner, outer).value

        poly = group.kl_poly(u, v, args.x, r_poly=closed)
    else:
        poly = group.kl_poly(u, v, args.x)

    method = f"kl-{args.x.name.lower()}"
    record = PolynomialRecord(str(args.spec), str(args.u), str(args.v), method, poly)
    print(record.render(args.format))
    logging.info("That's all! :smiley:")
