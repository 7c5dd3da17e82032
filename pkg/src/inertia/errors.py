"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or invalid input data (a violated precondition)."""


class UnsupportedError(RuntimeError):
    """A well-formed request the engine deliberately refuses to answer."""
