"""Error types raised by mumsep.

Every error carries the exit code the command line front end maps it to.
"""


class MumsepError(Exception):
    exit_code = 2


class InvalidDimensionError(MumsepError, ValueError):
    pass


class ShapeError(MumsepError, ValueError):
    pass


class ContractError(MumsepError, ValueError):
    pass


class InvalidStateError(MumsepError, ValueError):
    pass


class InvalidMixtureError(MumsepError, ValueError):
    pass


class ConfigurationError(MumsepError, ValueError):
    pass


class UnsupportedDimensionError(MumsepError, NotImplementedError):
    pass


class UnsupportedPartitionError(MumsepError, NotImplementedError):
    pass


class PositivityError(MumsepError, ValueError):
    """An operator or state failed the positivity requirement.

    `where` holds the offending `(b, n)` measurement/outcome pair (0-based)
    when the failure comes from a measurement operator.
    """
    exit_code = 3

    def __init__(self, message, where=None):
        super().__init__(message)
        self.where = where


class NumericIntegrityError(MumsepError, ArithmeticError):
    exit_code = 4
