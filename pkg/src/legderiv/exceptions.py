"""Exception types shared across the package."""

__all__ = ["DomainError", "ConvergenceError"]


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ConvergenceError(RuntimeError):
    """An iterative scheme hit its iteration/subdivision cap before converging."""
