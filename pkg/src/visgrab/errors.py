"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """A precondition of an operation was violated by its arguments."""


class ParseError(InvalidInput):
    """Malformed point-set text. ``line`` is 1-based, or None for whole-file problems."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class VerificationFailed(Exception):
    """A stored witness or corpus entry does not survive re-verification."""
