"""Exception hierarchy shared by every module of the package."""


class MonidealError(Exception):
    """Base class for all errors raised by monideal."""


class DimensionMismatchError(MonidealError, ValueError):
    pass


class UnsupportedIdealError(MonidealError, ValueError):
    """The operation needs an m-primary (and usually non-unit) ideal."""


class DomainError(MonidealError, ValueError):
    """A numeric argument is outside the operation's domain (e.g. c <= 0)."""


class ResourceLimitError(MonidealError):
    """A configured size cap (dimension, generators, box points) was exceeded."""


class InternalConsistencyError(MonidealError, AssertionError):
    """An executable self-check failed; this always signals a bug."""


class IdealSyntaxError(MonidealError, ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.text = text
        self.pos = pos
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} (line {self.line}, column {self.column})")

    def caret(self) -> str:
        """Two-line rendering of the offending line with a caret under the error."""
        lines = self.text.splitlines() or [""]
        src = lines[min(self.line, len(lines)) - 1]
        return f"{src}\n{' ' * (self.column - 1)}^"


class ConfigError(MonidealError, ValueError):
    """Invalid run configuration (resolution, grid, sweep settings)."""
