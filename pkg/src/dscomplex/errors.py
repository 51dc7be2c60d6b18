"""Exception hierarchy. CLI exit codes are attached to each class."""


class DscError(Exception):
    exit_code = 1


class InvalidInputError(DscError, ValueError):
    exit_code = 2


class CapExceededError(DscError):
    """Raised before materializing an object larger than the configured cap."""

    exit_code = 3

    def __init__(self, message, required=None, cap=None):
        super().__init__(message)
        self.required = required
        self.cap = cap


class ResourceError(CapExceededError):
    """Recursion budget exhausted."""


class NumericFailureError(DscError, ArithmeticError):
    exit_code = 4

    def __init__(self, message, best_iterate=None):
        super().__init__(message)
        self.best_iterate = best_iterate


class InconsistencyError(DscError):
    """A result contradicts a theorem the library relies on (e.g. det L != +-1)."""

    exit_code = 4
