"""Exception hierarchy shared by every module."""

from __future__ import annotations


class CutGroupsError(Exception):
    """Base class for all package errors."""


class InvalidSpec(CutGroupsError):
    """A group specification violates its parameter relations."""


class OrderCapExceeded(CutGroupsError):
    """The group (or a derived object) is larger than the configured cap."""

    def __init__(self, order, cap, what="group"):
        self.order = order
        self.cap = cap
        super().__init__(f"{what} of order {order} exceeds the enumeration cap {cap}")


class PNotDividing(CutGroupsError):
    pass


class NOutOfRange(CutGroupsError):
    pass


class JNotCoprime(CutGroupsError):
    pass


class NoQuadraticFound(CutGroupsError):
    """Index-2 unit subgroup without a matching quadratic field (internal bug)."""


class NoSuitablePrime(CutGroupsError):
    pass


class SplitFailure(CutGroupsError):
    """Common eigenspaces of the class matrices did not split into lines."""


class NotApplicable(CutGroupsError):
    pass


class ParseError(CutGroupsError):
    """Spec text could not be parsed; ``position`` is a byte offset."""

    def __init__(self, position, expected, text=""):
        self.position = position
        self.expected = sorted(set(expected))
        self.text = text
        exp = ", ".join(self.expected) if self.expected else "end of input"
        super().__init__(f"parse error at byte {position}: expected {exp}")
