"""Exception types shared across the package."""

from __future__ import annotations


class HuakitError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatchError(HuakitError, ValueError):
    """Operands have incompatible shapes."""


class ModelMismatchError(HuakitError, ValueError):
    """Module elements or algebra elements belong to different models."""


class DomainViolationError(HuakitError, ValueError):
    """An eigenvalue (or scalar argument) falls outside a function's domain."""

    def __init__(self, message: str, eigenvalue: float | None = None):
        super().__init__(message)
        self.eigenvalue = eigenvalue


class SingularityError(HuakitError, ValueError):
    """A positive inverse was requested for a spectrum touching zero."""

    def __init__(self, message: str, min_eigenvalue: float | None = None):
        super().__init__(message)
        self.min_eigenvalue = min_eigenvalue


class ConvergenceError(HuakitError, RuntimeError):
    """The eigensolver failed to converge."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class PreconditionError(HuakitError, ValueError):
    """An instance violates a verifier's stated preconditions."""
