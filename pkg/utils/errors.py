"""Exceptions raised by the chip-firing modules."""


class UnsupportedGraphError(ValueError):
    """A complete-graph fast path was handed some other graph."""


class OutOfRangeError(ValueError):
    """Parameters are valid but outside the range an operation covers."""


class DimensionError(ValueError):
    """A divisor or script does not match the vertex count of its graph."""


class ParseError(ValueError):
    """Malformed graph or divisor file.

    Keyword arguments:
    message -- what went wrong
    line -- 1-based line number of the offending line (or None)
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line {:d}: {:s}".format(line, message)
        super(ParseError, self).__init__(message)


class ResourceLimitError(RuntimeError):
    """A subdivision or enumeration would exceed the configured cap."""


class InternalError(RuntimeError):
    """A certificate failed to check. Signals a bug, never bad input."""
