"""Exception types shared across the package."""


class OnediskError(Exception):
    """Base class for all package-specific errors."""


class DegenerateBasisError(OnediskError, ValueError):
    """Raised when two basis vectors are (numerically) linearly dependent."""


class DomainError(OnediskError, ValueError):
    """Raised when an argument is outside an operation's documented domain."""


class SolverError(OnediskError, RuntimeError):
    """Raised when a numeric solver detects an internally inconsistent state."""


class RefinementStallError(OnediskError, RuntimeError):
    """Raised when local refinement stops improving before reaching tolerance."""
