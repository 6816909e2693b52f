"""Exception types shared across the package."""


class PolyfreeError(Exception):
    pass


class InputError(PolyfreeError, ValueError):
    """Malformed input: unknown vertex, bad token, improper coloring, ..."""


class GraphParseError(InputError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class ResourceError(PolyfreeError, RuntimeError):
    """A search exceeded its configured size cap."""

    def __init__(self, message, cap=None):
        self.cap = cap
        super().__init__(message)


class BreakingSetRefused(InputError):
    """A vertex set does not witness the doubly breakable cycle property.

    ``offending`` holds the edge or vertices that caused the refusal, when
    there is one to name.
    """

    def __init__(self, reason, offending=None):
        self.reason = reason
        self.offending = offending
        super().__init__(reason)
