"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input data violates a documented precondition or invariant."""


class DimensionError(ValidationError):
    """Array sizes or subsystem dimensions are inconsistent."""


class InvalidDensityError(ValidationError):
    """Matrix is not an admissible density matrix."""
