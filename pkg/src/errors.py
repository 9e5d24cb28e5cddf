"""Exception hierarchy for the Lie bialgebra toolkit.

Every error derives from ValueError so callers that only catch ValueError
keep working. The CLI maps DocumentError to exit status 2 and the other
library errors to exit status 1.
"""

from __future__ import annotations


class LieBialgebraError(ValueError):
    """Base class for all library errors."""


class NotSymmetricError(LieBialgebraError):
    """A symmetric matrix was required."""

    def __init__(self, message: str = "not symmetric") -> None:
        super().__init__(message)


class SingularMatrixError(LieBialgebraError):
    """An invertible matrix was required."""


class ShapeError(LieBialgebraError):
    """Dimensions of the operands do not fit together."""


class ParameterRangeError(LieBialgebraError):
    """A catalog label parameter lies outside its admissible range."""

    def __init__(self, detail: str = "") -> None:
        message = "parameter out of range"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class UnsupportedAlgebraError(LieBialgebraError):
    """The operation is only defined for specific catalog algebras."""

    def __init__(self, detail: str = "") -> None:
        message = "unsupported"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class NotACoboundaryError(LieBialgebraError):
    """A cobracket has no preimage under r -> ad(r)."""

    def __init__(self, message: str = "not a coboundary") -> None:
        super().__init__(message)


class RecognitionError(LieBialgebraError):
    """The isomorphism type of an algebra could not be determined exactly."""


class InvalidBialgebraError(LieBialgebraError):
    """A (bracket, cobracket) pair violates a bialgebra axiom."""

    def __init__(self, axiom: str, detail: str = "") -> None:
        self.axiom = axiom
        message = f"{axiom} condition fails"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class NotAnAutomorphismError(LieBialgebraError):
    """A matrix is singular or does not preserve the bracket."""


class DocumentError(LieBialgebraError):
    """A JSON document is malformed; ``field`` names the offending entry."""

    def __init__(self, field: str, message: str) -> None:
        self.field = field
        super().__init__(f"{field}: {message}")
