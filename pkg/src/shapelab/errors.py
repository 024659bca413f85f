"""Exception types shared across the package."""


class ShapelabError(Exception):
    """Base class for all package errors."""


class ValidationError(ShapelabError, ValueError):
    """A value or specification violates a documented invariant."""


class GeometryError(ValidationError):
    """Geometric input is degenerate or outside the supported range."""


class FeasibilityError(ValidationError):
    """A requested target lies outside the feasible set."""


class MissingDataError(ValidationError):
    """An optional field required by the requested operation is absent."""


class IterationLimitError(ShapelabError, RuntimeError):
    """An iterative solver hit its iteration cap before reaching tolerance."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual
