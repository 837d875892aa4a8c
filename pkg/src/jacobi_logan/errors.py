"""Exception types raised across the package."""


class JacobiError(Exception):
    """Base class for all errors raised by jacobi_logan."""


class PoleError(JacobiError, ValueError):
    """Argument sits on a pole of the Gamma function."""


class ParameterError(JacobiError, ValueError):
    """Invalid parameter combination."""


class DomainError(JacobiError, ValueError):
    """Argument outside the supported evaluation domain."""


class ConvergenceError(JacobiError, ArithmeticError):
    """A series or iteration did not converge within its budget."""


class BracketingError(JacobiError, RuntimeError):
    """A sign change could not be isolated during a root search."""

    def __init__(self, message, interval=None):
        super().__init__(message)
        self.interval = interval


class TailDivergenceError(JacobiError, ValueError):
    """The declared decay of a spectral integrand is too slow."""


class RefinementBudgetError(JacobiError, RuntimeError):
    """Panel refinement exhausted its budget before reaching tolerance."""


class SignViolationError(JacobiError, ArithmeticError):
    """A coefficient that must be positive came out non-positive."""
