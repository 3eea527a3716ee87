"""Exception types raised across the package."""

from __future__ import annotations


class GraphFormatError(ValueError):
    """Malformed edge-list input; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotAnAllianceError(ValueError):
    """A vertex set that was required to be a defensive alliance is not one."""


class PreconditionError(ValueError):
    """An input violates a documented precondition of an operation."""


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its configured size budget."""
