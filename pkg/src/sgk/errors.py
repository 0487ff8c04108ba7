"""Exception types shared across the package."""

from __future__ import annotations


class SgkError(Exception):
    """Base class for every error raised by this package."""


class DomainMismatchError(SgkError):
    """Operands or operations disagree about the value domain."""


class DimensionMismatchError(SgkError):
    """Container shapes are incompatible with the requested operation."""


class IndexRangeError(SgkError):
    """An index lies outside the container bounds."""


class DuplicateIndexError(SgkError):
    """An index list contains a repeated position."""


class UnsupportedDomainError(SgkError):
    """The requested operation is not defined over this value domain."""


class UnknownSemiringError(SgkError):
    """No semiring is available under the requested name."""


class DuplicateNameError(SgkError):
    """A semiring with this name already exists in the registry."""


class LawCheckError(SgkError):
    """An operation violates one of the required algebraic laws."""

    def __init__(self, law: str, witness: tuple, message: str = ""):
        self.law = law
        self.witness = witness
        super().__init__(message or f"{law} violated at {witness!r}")


class PreconditionError(SgkError):
    """An algorithm precondition does not hold for the given input."""


class ParseError(SgkError):
    """A file or stream could not be parsed."""

    def __init__(self, line: int | None, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}" if line is not None else reason)


class UnserializableDomainError(SgkError):
    """The container's value domain cannot be written in this format."""


class InternalInvariantError(SgkError):
    """An internal fixed-point or consistency guarantee failed."""


class UsageError(SgkError):
    """Command line arguments are invalid."""
