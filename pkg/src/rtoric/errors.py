"""Shared exception types."""


class ValidationError(ValueError):
    """Malformed input document or data violating a precondition."""


class CrossCheckError(RuntimeError):
    """An internal consistency check failed (guard degree, Euler count,
    component count, or a cross-pipeline comparison)."""
