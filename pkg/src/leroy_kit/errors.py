"""Exception types shared across the package.

The split matters for the CLI: domain violations exit with code 2,
convergence failures with code 3.
"""


class LeroyKitError(Exception):
    """Base class for all package errors."""


class DomainError(LeroyKitError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class PoleError(DomainError):
    """Evaluation requested exactly at (or on the wrong side of) a pole."""


class ConvergenceError(LeroyKitError, ArithmeticError):
    """A series or quadrature failed to converge within its configured budget."""

    def __init__(self, message: str, *, last_estimate: float | None = None):
        super().__init__(message)
        self.last_estimate = last_estimate
