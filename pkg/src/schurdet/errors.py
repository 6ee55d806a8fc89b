"""Exceptions shared across the package."""


class SizeGuardError(ValueError):
    """An argument exceeds the size guards that keep exact arithmetic fast."""


class InvalidWitnessError(ValueError):
    """A kernel witness breaks its contract (e.g. contains a zero vector)."""


class InternalConsistencyError(RuntimeError):
    """An identity that must hold by construction failed; signals a bug."""
