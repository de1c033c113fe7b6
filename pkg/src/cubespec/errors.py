"""Exception types shared across the package."""


class CubespecError(Exception):
    """Base class for all package errors."""


class ParameterError(CubespecError, ValueError):
    """An argument is outside its allowed range or malformed."""


class ResourceLimitError(CubespecError):
    """A request would allocate a 2^n table above the configured cap.

    Exceeding the cap is always an error, never a silent truncation.
    """


class FormatError(CubespecError, ValueError):
    """A table file failed to parse; the message carries the line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line
