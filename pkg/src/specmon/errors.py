"""Exception types shared across the package."""

from __future__ import annotations


class SpecmonError(Exception):
    """Base class for every error raised by this package."""


class ParseError(SpecmonError):
    """Malformed input text; carries an optional source location."""

    def __init__(self, message: str, *, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)


class UnknownSymbol(ParseError):
    """A word or equation uses a name that the alphabet does not declare."""


class EmptyRelator(ParseError):
    """Relators must be nonempty words."""


class DuplicateRelator(ParseError):
    """Two relators of a presentation are the same word."""


class AmbiguousCompactForm(ParseError):
    """Unspaced word syntax used with an alphabet of multi-character names."""


class UndeclaredVariable(SpecmonError):
    """An equation token refers to a variable with no declared value."""


class NotConfluent(SpecmonError):
    """The operation needs a confluent system to be exact."""


class NotInvertible(SpecmonError):
    """The word does not represent a unit of the monoid."""


class BudgetExceeded(SpecmonError):
    """A configured enumeration cap was hit before the computation finished."""
