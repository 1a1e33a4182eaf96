"""Exception types shared across the package.

Every error raised by the library derives from :class:`HeapslawError`, so
callers (and the CLI) can distinguish bad input from numerical trouble
without string matching.
"""

from __future__ import annotations


class HeapslawError(Exception):
    """Base class for all library errors."""


class DomainError(HeapslawError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class DegenerateInput(HeapslawError, ValueError):
    """Too few or collinearly degenerate points for a regression."""


class NumericsError(HeapslawError, ArithmeticError):
    """A numerical result is inconsistent beyond rounding tolerance.

    Raised instead of silently clamping when a quantity that must be
    nonnegative comes out below the rounding floor, or when an internal
    cross-check identity fails.
    """


class UnknownPosTag(HeapslawError, KeyError):
    """A POS tag has no entry in the active tag map.

    Lookups are total by contract: silently defaulting an unknown tag
    would shift every per-class statistic downstream.
    """

    def __init__(self, tag: str, line: int | None = None):
        self.tag = tag
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"POS tag {tag!r} not present in tag map{where}")

    def __str__(self) -> str:  # KeyError quotes its args; keep the message
        return self.args[0]


class EmptyText(HeapslawError, ValueError):
    """A text has no countable tokens after filtering."""


class GridMismatch(HeapslawError, ValueError):
    """An ensemble curve was computed on a grid foreign to the text."""


class TooLarge(HeapslawError, ValueError):
    """Exhaustive enumeration was requested beyond its feasible size."""


class InterchangeError(HeapslawError, ValueError):
    """A tagged-token interchange file or tag-map file is malformed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")


class ManifestError(HeapslawError, ValueError):
    """A corpus manifest is malformed or references missing files."""
