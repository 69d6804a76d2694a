"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
"""

from hermkl import const
import logging
import sys
from typing import Callable


class HermklError(Exception):
    """Base class of all library errors."""


class InputError(HermklError):
    """Raised on malformed user input. Exits with a usage status."""


class InvalidSpec(InputError):
    pass


class NotAShape(InputError):
    pass


class AmbientMismatch(InputError):
    pass


class NotContained(InputError):
    pass


class UnsupportedFamily(InputError):
    pass


class ComputationError(HermklError):
    """Raised when a computation breaks one of its own identities."""


class NonExactDivision(ComputationError):
    pass


class NonPolynomialBase(ComputationError):
    pass


class NegativeEta(ComputationError):
    pass


class NotQuotientRep(ComputationError):
    pass


class InversionInconsistent(ComputationError):
    pass


def enable_rich_assert(fun: Callable) -> Callable:
    def wrapper(*args, **kwargs):
        try:
            return fun(*args, **kwargs)
        except (AssertionError, InputError) as e:
            logging.exception(e)
            sys.exit(const.EXIT_USAGE)
        except ComputationError as e:
            logging.exception(e)
            sys.exit(const.EXIT_FAILURE)

    return wrapper
