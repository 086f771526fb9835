"""
Exception hierarchy shared by every module.

Each error carries a ``kind`` (the class name) and a human ``detail``; the CLI
turns ``DomainError`` into exit code 1 and ``MalformedInput`` into exit code 2.
"""
from typing import Optional
from typing import Dict
from typing import Any


class PadicError(Exception):
    """Base class; ``kind`` is stable and used in JSON error objects."""

    def __init__(self, detail: str = ""):
        super().__init__(detail)
        self.detail = detail

    @property
    def kind(self) -> str:
        return type(self).__name__

    def to_dict(self) -> Dict[str, Any]:
        return {"error": {"kind": self.kind, "detail": self.detail}}


class DomainError(PadicError):
    """Well-formed input that the mathematics rejects."""


class MalformedInput(PadicError):
    """Input that does not follow the documented grammar or contracts."""


# --- precision -------------------------------------------------------------

class InsufficientPrecision(DomainError):
    """The answer depends on digits beyond the carried precision."""


class DivisionByApproxZero(DomainError):
    pass


class AmbiguousAtPrecision(DomainError):
    pass


class ZeroAtPrecision(DomainError):
    pass


class PrecisionTooLowToSeparateRoots(DomainError):
    pass


class Inseparable(DomainError):
    pass


# --- fields ----------------------------------------------------------------

class WildExtension(DomainError):
    pass


class FieldMismatch(DomainError):
    pass


class NotEisenstein(MalformedInput):
    pass


# --- filtrations and tori --------------------------------------------------

class NotABreak(DomainError):
    pass


class NotInTorus(DomainError):
    pass


class NotRegular(DomainError):
    pass


class NotCompact(DomainError):
    pass


class WildTorus(DomainError):
    pass


class NoSplittingField(DomainError):
    """No tame splitting field was found within the configured search degree."""


class PreconditionViolated(DomainError):
    pass


class PointNotFixed(DomainError):
    pass


class NonPositiveDepth(MalformedInput):
    pass


# --- characters ------------------------------------------------------------

class OutOfAbelianRange(DomainError):
    pass


class EnumerationTooLarge(DomainError):
    pass


# --- input -----------------------------------------------------------------

class InvalidInput(MalformedInput):
    pass


class ParseError(MalformedInput):
    """Literal grammar violation; ``position`` is 0-based into ``text``."""

    def __init__(self, detail: str, text: str = "", position: Optional[int] = None):
        if position is not None:
            detail = f"{detail} (at position {position} in {text!r})"
        super().__init__(detail)
        self.text = text
        self.position = position
