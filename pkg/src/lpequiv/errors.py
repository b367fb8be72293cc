"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class LpeqError(Exception):
    """Base class for every error raised by this package."""


class DeclarationError(LpeqError):
    """Inconsistent visible/hidden declarations or unknown atoms."""


class WeightOverflowError(LpeqError, ArithmeticError):
    """A weight sum or bound left the 63-bit natural range."""


class CapExceededError(LpeqError):
    """An exhaustive procedure was asked to enumerate too many atoms."""


class BaseMismatchError(LpeqError):
    """Two programs compared for equivalence have different visible bases."""

    def __init__(self, only_left, only_right):
        self.only_left = frozenset(only_left)
        self.only_right = frozenset(only_right)
        super().__init__(
            "visible Herbrand bases differ: only in first {%s}, only in second {%s}"
            % (", ".join(sorted(self.only_left)), ", ".join(sorted(self.only_right)))
        )


class ReservedNameError(LpeqError):
    """A user atom uses a name from a generated-atom namespace."""

