"""Exception types raised by the library."""


class SignedColorError(Exception):
    """Base class for domain errors."""


class GraphFormatError(SignedColorError, ValueError):
    """Malformed ``.sg`` input."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InstanceTooLargeError(SignedColorError):
    """An exponential-time routine was called on an instance above its guard."""


class NegativeLoopError(SignedColorError):
    """A negative loop makes a signed graph uncolorable."""


class NotBalancedError(SignedColorError):
    pass


class ColoringError(SignedColorError):
    """A coloring is malformed or violates an operation's precondition."""
