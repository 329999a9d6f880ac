"""Exceptions shared across modules."""


class InternalInvariantError(RuntimeError):
    """A condition the pipeline guarantees was violated; indicates a bug."""
