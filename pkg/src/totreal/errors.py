"""Exception types shared by the calculator."""


class CalcError(Exception):
    """Base class for calculator errors."""


class ParseError(CalcError):
    """Malformed manifold expression.

    ``offset`` is the byte offset into ``source`` where the problem was found.
    """

    def __init__(self, message: str, source: str, offset: int):
        super().__init__(message)
        self.message = message
        self.source = source
        self.offset = offset

    def render(self) -> str:
        return f"parse error at offset {self.offset}: {self.message}\n  {self.source}\n  {' ' * self.offset}^"


class SemanticError(CalcError, ValueError):
    """A well-formed request that names an impossible construction."""


class UnsupportedQuery(CalcError):
    """The data needed to answer a query is not available."""
