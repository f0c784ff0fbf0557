"""Exception types shared across the package."""


class RisUnderlayError(Exception):
    """Base class for all package errors."""


class ValidationError(RisUnderlayError, ValueError):
    """An input record violates one of its invariants.

    ``field`` names the offending field when known.
    """

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class DomainError(RisUnderlayError, ValueError):
    """Argument outside the mathematical domain of a function."""


class PoleError(DomainError):
    """Argument sits exactly on a pole (distinct from a plain domain error)."""


class UnsupportedParametersError(RisUnderlayError, ValueError):
    """Special-function parameters outside the supported lattice."""


class MissingParameterError(RisUnderlayError, ValueError):
    """Operation needs geometry-derived parameters that were never set."""


class ComputationError(RisUnderlayError, ArithmeticError):
    """Numerical failure (overflow / non-finite intermediate).

    ``term`` optionally carries the (n, k) summation index that failed.
    """

    def __init__(self, message, term=None):
        super().__init__(message)
        self.term = term


class QuadratureError(ComputationError):
    """Adaptive quadrature failed to reach the requested tolerance.

    ``achieved`` carries the error estimate actually reached.
    """

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class ConfigError(RisUnderlayError, ValueError):
    """Malformed sweep configuration file; carries a line number when known."""

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line
