"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ParseError(ValueError):
    """A data file is malformed; the message names the offending line."""


class ResourceError(RuntimeError):
    """A computation needs more input (zeros, scan window) than is available."""


class DivergenceError(RuntimeError):
    """A trajectory left the integration envelope."""

    def __init__(self, message: str, step: int | None = None):
        super().__init__(message)
        self.step = step


class ConvergenceError(RuntimeError):
    """An iterative solver failed to converge."""

    def __init__(self, message: str, level: int | None = None):
        super().__init__(message)
        self.level = level
