"""Exception hierarchy for cubic-composition."""

from typing import Optional


class CubicCompositionError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(CubicCompositionError, ValueError):
    """A mathematical precondition supplied by the caller does not hold."""


class InvalidDiscriminantError(DomainError):
    """The integer D is not a valid discriminant.

    Attributes:
        value: The rejected integer
        condition: Which requirement failed ("zero", "square" or "residue")
    """

    def __init__(self, value: int, condition: str):
        self.value = value
        self.condition = condition
        messages = {
            "zero": "D must be nonzero",
            "square": f"D = {value} is a perfect square",
            "residue": f"D = {value} is not congruent to 0 or 1 modulo 4",
        }
        super().__init__(messages.get(condition, f"invalid discriminant {value}"))


class DiscriminantMismatchError(DomainError):
    """Two objects that must share a discriminant do not."""

    def __init__(self, left: int, right: int, context: Optional[str] = None):
        self.left = left
        self.right = right
        prefix = f"{context}: " if context else ""
        super().__init__(f"{prefix}discriminant {left} does not match {right}")


class NotProjectiveError(DomainError):
    """A cubic form whose Hessian is not primitive was passed where projectivity is required."""


class NotUnimodularError(DomainError):
    """A 2x2 integer matrix does not have determinant 1."""


class DegenerateBasisError(DomainError):
    """An ordered basis is linearly dependent over Q."""


class NotAnIdealError(DomainError):
    """A lattice is not stable under multiplication by the ring generator."""


class NotInModuleError(DomainError):
    """An element has non-integral coordinates in a module basis."""


class UnbalancedPairError(DomainError):
    """Reading a cubic form off a pair produced non-integral coefficients."""


class NotInvertibleError(DomainError, ZeroDivisionError):
    """A field element that must be invertible is zero."""


class ParseError(DomainError):
    """Text input does not follow the documented syntax."""


class ClassLookupError(DomainError):
    """A form could not be placed among the enumerated class representatives."""


class InternalError(CubicCompositionError, RuntimeError):
    """A state that the mathematics rules out was reached."""


class VerificationError(InternalError):
    """A symbolic identity that must hold by construction failed."""
