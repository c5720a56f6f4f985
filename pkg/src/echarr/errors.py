"""Exception types shared across the package.

The CLI maps these onto exit codes: InputError -> 2, ResourceLimitError -> 3,
MismatchError -> 1.
"""


class InputError(ValueError):
    """Malformed or out-of-contract input (bad color, bad vertex, bad file)."""


class ResourceLimitError(RuntimeError):
    """A configured enumeration or size budget would be exceeded."""

    def __init__(self, message: str, limit: int | None = None):
        super().__init__(message)
        self.limit = limit


class MismatchError(RuntimeError):
    """Two computation routes that must agree did not."""
