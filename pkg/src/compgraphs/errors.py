"""Exceptions shared across the package."""


class SizeGuardError(ValueError):
    """An exact search refused an instance beyond its documented limit."""

    def __init__(self, guard: str, message: str):
        super().__init__(message)
        self.guard = guard


class ParseError(ValueError):
    """Malformed graph, digraph, cover or design input."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column
