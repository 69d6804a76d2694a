"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
@description: fixed tables shared across modules
"""

from enum import Enum, unique
from typing import FrozenSet


@unique
class FAMILY(Enum):
    """Hermitian symmetric quotient families.

    Extends:
            Enum

    Variables:
            A {str} -- A_n / A_{p-1} x A_{n-p}
            B {str} -- B_n / B_{n-1}
            C {str} -- C_n / A_{n-1}
            DA {str} -- D_n / A_{n-1}
            DD {str} -- D_n / D_{n-1}
            E6 {str} -- E_6 / D_5
            E7 {str} -- E_7 / E_6
    """

    A = "A"
    B = "B"
    C = "C"
    DA = "DA"
    DD = "DD"
    E6 = "E6"
    E7 = "E7"

    @property
    def classical(self) -> bool:
        return self not in (FAMILY.E6, FAMILY.E7)

    @property
    def signed(self) -> bool:
        return self in (FAMILY.B, FAMILY.C, FAMILY.DA, FAMILY.DD)

    @property
    def even_signed(self) -> bool:
        return self in (FAMILY.DA, FAMILY.DD)


@unique
class ROOT_LENGTH(Enum):
    SHORT = 0
    LONG = 1


EXCEPTIONAL_RANK = {FAMILY.E6: 6, FAMILY.E7: 7}

EXIT_FAILURE = 1
EXIT_USAGE = 2


def long_generators(family: FAMILY, rank: int) -> FrozenSet[int]:
    """Generators whose simple root is long.

    Simply-laced families have no long generators (all roots share a length,
    and the marking rules treat them as short).

    Arguments:
            family {FAMILY}
            rank {int}

    Returns:
            FrozenSet[int]
    """
    if FAMILY.B == family:
        return frozenset(range(1, rank))
    if FAMILY.C == family:
        return frozenset([rank])
    return frozenset()


def root_length(family: FAMILY, rank: int, s: int) -> ROOT_LENGTH:
    if s in long_generators(family, rank):
        return ROOT_LENGTH.LONG
    return ROOT_LENGTH.SHORT
