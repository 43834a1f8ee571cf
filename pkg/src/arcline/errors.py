"""Structured errors shared across the package.

Every anticipated failure raises an ArclineError subclass carrying enough
fields to render a useful diagnostic, both as text and as JSON. Anything
else escaping the library is a bug, not a domain condition.
"""

from __future__ import annotations


class ArclineError(Exception):
    """Base class for all domain errors raised by this package."""

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def payload(self) -> dict:
        out = {"type": type(self).__name__, "message": self.message}
        out.update(self.details)
        return out

    def __str__(self) -> str:
        if not self.details:
            return self.message
        extra = ", ".join(f"{k}={v!r}" for k, v in sorted(self.details.items()))
        return f"{self.message} ({extra})"


class ParseError(ArclineError):
    """Syntax or symbol error in a polynomial expression.

    `position` is the 0-based offset into the source text.
    """

    def __init__(self, message: str, position: int, text: str = "", **details):
        super().__init__(message, position=position, **details)
        self.position = position
        self.text = text

    def __str__(self) -> str:
        caret = ""
        if self.text:
            caret = f"\n  {self.text}\n  {' ' * self.position}^"
        return f"{self.message} at position {self.position}{caret}"


class DomainError(ArclineError):
    """A mathematical precondition failed; the inputs name no valid problem."""


class NonPureClassError(ArclineError):
    """A class expected to be an integer multiple of a single basis monomial
    had other terms. Signals either misuse (wrong fiber codimension) or an
    internal inconsistency, never silently coerced to a number."""


class InexactDivisionError(ArclineError):
    """An integral class failed a checked division by an integer."""
