class GeombsError(Exception):
    """Base class for all library errors."""

    category = "error"


class ValidationError(GeombsError):
    """Malformed instance, subset, or parameter."""

    category = "validation"


class CapacityError(GeombsError):
    """Input exceeds a configured exhaustive-search cap."""

    category = "capacity"
