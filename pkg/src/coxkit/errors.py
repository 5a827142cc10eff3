"""Exception types shared across the package."""


class CoxkitError(ValueError):
    """A precondition or input-validation failure (CLI exit code 2)."""


class DiagramParseError(CoxkitError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class DisconnectedDiagramError(CoxkitError):
    pass


class InfiniteCellError(CoxkitError):
    """Raised when an infinite small cell is enumerated without a length cap."""


class OrbitCapExceeded(CoxkitError):
    pass


class NotComposableError(CoxkitError):
    pass
