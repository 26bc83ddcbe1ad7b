"""Exception types shared across the package."""


class ProflatError(Exception):
    """Base class for all package-specific errors."""


class DomainError(ProflatError):
    """An argument is outside the mathematical domain of the operation."""


class ConstructionError(ProflatError):
    """A group, map or tower cannot be built from the given data."""


class ResourceLimitError(ProflatError):
    """A size bound was exceeded; the message names the bound."""


class FormatError(ProflatError):
    """A text record could not be parsed; carries a line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        self.message = message
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
