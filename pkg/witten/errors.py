__author__ = 'max'


class WittenError(Exception):
    """
    Base class of all errors raised by the package.
    exit_code is the process exit status used by the command line front end.
    """
    exit_code = 1


class InvalidInputError(WittenError, ValueError):
    exit_code = 2


class NonConvergenceError(WittenError, RuntimeError):
    exit_code = 3


class ConsistencyError(WittenError, RuntimeError):
    """
    An internal identity that must hold by construction was violated
    (null direction of H not annihilated, negative energy pairing, ...).
    """
    exit_code = 4
