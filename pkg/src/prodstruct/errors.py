"""Exception types shared across the package."""

from __future__ import annotations


class ProdstructError(Exception):
    """Base class for all package-specific errors."""


class PreconditionError(ProdstructError, ValueError):
    """An operation was called on input violating its stated precondition."""


class NotKApexError(PreconditionError):
    """No apex set of the requested size makes the graph planar."""

    def __init__(self, message: str, attempts: dict[int, int] | None = None):
        super().__init__(message)
        # subset-size -> number of candidate apex sets tried
        self.attempts = attempts or {}


class ParseError(ProdstructError, ValueError):
    """A text input could not be parsed; carries a 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class SizeGuardError(ProdstructError, RuntimeError):
    """A size guard refused to build or process an oversized instance."""


class TreewidthCapError(SizeGuardError):
    """Exact width computation refused: vertex count exceeds the configured cap."""


class CanonicalCapError(SizeGuardError):
    """Canonical-form search refused: permutation space exceeds the cap."""


class InternalInvariantError(ProdstructError, RuntimeError):
    """A guaranteed-to-succeed search failed or a verified postcondition broke.

    Raising this signals a bug in this package, never bad user input.
    """
