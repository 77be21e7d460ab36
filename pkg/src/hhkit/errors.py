"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ParameterError(ValueError):
    """A convexity/exponent parameter violates a theorem's stated range."""


class ConvergenceError(RuntimeError):
    """An iterative evaluation exhausted its term budget before converging."""


class ToleranceNotMetError(RuntimeError):
    """Adaptive quadrature could not certify the requested tolerance.

    Carries the best available estimate and its error bound so callers can
    still inspect the failed attempt.
    """

    def __init__(self, message: str, estimate: float, error_bound: float):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound


class CertificationError(RuntimeError):
    """A theorem was requested for a function that failed convexity certification."""


class InconclusiveError(RuntimeError):
    """Grid sampling could not settle a precondition (e.g. mixed-sign slopes)."""
