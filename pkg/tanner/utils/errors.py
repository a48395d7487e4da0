"""Handle errors.

Every error raised by Tanner goes through [tanner_error] so that the
messages share the same prefix. The classes below let the command line
map a failure to its exit status: a DomainError means the inputs were
wrong (exit 1), a NumericalError means a solver gave up (exit 2).
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


class TannerError(Exception):
    pass


class DomainError(TannerError, ValueError):
    """Invalid parameters, states or configuration keys."""


class SingularityError(DomainError):
    """The Leslie-Gower term P/(nN) is evaluated at N=0."""


class UnsupportedVariantError(DomainError):
    pass


class ConfigError(DomainError):
    pass


class NumericalError(TannerError, ArithmeticError):
    """Step-size underflow, Newton divergence..."""


class InconsistencyError(NumericalError):
    """A solver identity failed: signals a bug, not a bad input."""


def tanner_error(err_type, fct_name, msg):
    raise err_type("'x|x, Tanner Error in {}: {}".format(fct_name, msg))
