"""Exception types shared across ordforge.

Everything derives from :class:`OrdforgeError` so callers (the CLI in
particular) can catch library failures with a single except clause.
"""

from __future__ import annotations


class OrdforgeError(Exception):
    """Base class for every error raised by this package."""


class ParseError(OrdforgeError, ValueError):
    """Malformed input text.  ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int | None = None, text: str | None = None):
        self.message = message
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)


class NonNormalInput(OrdforgeError, ValueError):
    """An ordinal term violates a normal-form invariant."""


class OrdinalRangeError(OrdforgeError, ValueError):
    """The requested ordinal lies outside the notation system (at or above the
    first epsilon number after the big pivot)."""


class NonNormalPsiArgument(OrdforgeError, ValueError):
    """The collapsing constructor was applied to an argument that is not a
    member of its own closure stage."""


class TheoryMismatch(OrdforgeError, ValueError):
    """A construct is not available in the selected theory."""


class ClassViolation(OrdforgeError, ValueError):
    """A formula does not belong to the required syntactic class."""


class NoLevel(OrdforgeError, ValueError):
    """Level requested for a term that does not carry one."""


class ArityMismatch(OrdforgeError, ValueError):
    """An ordinal assignment does not match the number of term slots."""


class UncheckedDerivation(OrdforgeError, ValueError):
    """A derivation handed to the analysis layer does not pass the checker."""


class DomainViolation(OrdforgeError, ValueError):
    """Arguments fall outside the domain of a cut-elimination bound."""


class PreconditionViolated(OrdforgeError, ValueError):
    """A documented precondition of a bound computation does not hold."""


class NotSigmaSentence(OrdforgeError, ValueError):
    """The end sequent is not of the form ``=> A`` for a Sigma sentence ``A``."""


class StageCapExceeded(OrdforgeError, ValueError):
    """A finite stage beyond the configured cap was requested."""


class AssignmentError(OrdforgeError, ValueError):
    """An assignment misses a free variable or gives a value outside the
    stage its variable is allowed to range over."""
