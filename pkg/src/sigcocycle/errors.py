"""Exception hierarchy.

Every error carries an ``exit_code`` so the command line front end can map
failures without a lookup table: 1 for computation-domain errors, 2 for bad
input, 3 for internal-consistency failures.
"""


class SigCocycleError(Exception):
    exit_code = 1


class InputError(SigCocycleError, ValueError):
    exit_code = 2


class DimensionMismatch(InputError):
    pass


class GenusMismatch(InputError):
    pass


class NotSymmetric(InputError):
    pass


class NotSymplectic(InputError):
    pass


class ZeroVector(InputError):
    pass


class RangeError(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class NotPeriodic(SigCocycleError):
    exit_code = 1


class NotTorelli(SigCocycleError):
    exit_code = 1


class ConsistencyError(SigCocycleError):
    exit_code = 3


class AsymmetryDetected(ConsistencyError):
    pass


class CalibrationError(ConsistencyError):
    pass
