"""Exception hierarchy."""

from __future__ import annotations


class AnnigraphError(Exception):
    """Base class for every error raised by this package."""


class InvalidOrder(AnnigraphError, ValueError):
    pass


class InvalidCharacteristic(AnnigraphError, ValueError):
    pass


class InvalidModulus(AnnigraphError, ValueError):
    pass


class ZeroRingError(AnnigraphError, ValueError):
    pass


class AxiomViolation(AnnigraphError, ValueError):
    """Operation tables do not describe a commutative unital ring."""


class RingMismatch(AnnigraphError, ValueError):
    pass


class NotDistinct(AnnigraphError, ValueError):
    pass


class UnknownVertex(AnnigraphError, KeyError):
    pass


class RingSpecSyntaxError(AnnigraphError, ValueError):
    """Syntax error in a ring specification string, with 0-based position."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")
