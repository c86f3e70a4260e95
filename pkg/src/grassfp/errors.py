"""Exception hierarchy shared by every module."""


class GrassfpError(Exception):
    """Base class for all library errors."""


class ParameterError(GrassfpError, ValueError):
    """Invalid input: bad (k, n), a partition outside the box, etc."""


class DomainError(ParameterError):
    """A closed-form evaluation point lies outside the admissible region."""


class InvariantViolation(GrassfpError):
    """An internal consistency check failed (e.g. a negative structure constant)."""


class CoefficientOverflowError(GrassfpError, OverflowError):
    """A structure constant does not fit in a signed 64-bit integer."""


class SpectralConvergenceError(GrassfpError):
    """Power iteration did not reach the requested residual.

    The last iterate and its diagnostics are kept on the exception.
    """

    def __init__(self, message, *, estimate, residual, iterations, vector):
        super().__init__(message)
        self.estimate = estimate
        self.residual = residual
        self.iterations = iterations
        self.vector = vector


class TableFormatError(GrassfpError):
    """A product-table cache file is malformed or inconsistent."""
