"""Exception hierarchy shared by every layer of the package."""

from __future__ import annotations


class NCMotiveError(Exception):
    """Base class for all errors raised by :mod:`ncmotive`."""


class ModelMismatch(NCMotiveError, ValueError):
    """Two values living in different Brauer-group models were combined."""


class InvalidClass(NCMotiveError, ValueError):
    """A payload does not describe an element of the requested model."""


class IndexDegreeViolation(NCMotiveError, ValueError):
    """The index of a class does not divide the requested degree."""


class RankTooLarge(NCMotiveError):
    """Exhaustive permutation search was asked for a motive beyond its bound."""

    def __init__(self, rank: int, bound: int):
        super().__init__(f"rank {rank} exceeds oracle bound {bound}")
        self.rank = rank
        self.bound = bound


class ParseError(NCMotiveError):
    """Syntax error in the expression language, with a 1-based position."""

    def __init__(self, line: int, col: int, expected: str, found: str = ""):
        msg = f"{line}:{col}: expected {expected}"
        if found:
            msg += f", found {found}"
        super().__init__(msg)
        self.line = line
        self.col = col
        self.expected = expected
        self.found = found


class ValidationError(NCMotiveError):
    """Input parsed, but describes an invalid object (or references an unknown name)."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        if line is not None:
            message = f"{line}:{col}: {message}"
        super().__init__(message)
        self.line = line
        self.col = col
