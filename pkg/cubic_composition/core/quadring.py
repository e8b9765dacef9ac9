"""Exact arithmetic in Q(sqrt(D)) and the quadratic order R_D.

Elements are stored as ``s + t*sqrt(D)`` with rational ``s`` and ``t``. The order
R_D is ``Z + Z*omega`` where ``omega = tau`` if D is 0 mod 4 and
``omega = 1/2 + tau`` if D is 1 mod 4, with ``tau = sqrt(D)/2``.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from sympy import integer_nthroot

from cubic_composition.core.errors import (
    DiscriminantMismatchError,
    InvalidDiscriminantError,
    NotInvertibleError,
    ParseError,
)

Rational = Union[int, Fraction]

_ELEMENT_PATTERN = re.compile(
    r"^\s*(?P<s>[+-]?\d+(?:/\d+)?)?"
    r"\s*(?:(?P<sign>[+-])?\s*(?P<t>\d+(?:/\d+)?)\s*\*\s*sqrt\(\s*(?P<d>[+-]?\d+)\s*\))?\s*$"
)


@dataclass(frozen=True)
class Discriminant:
    """A nonzero, nonsquare integer congruent to 0 or 1 modulo 4."""

    value: int

    def __post_init__(self) -> None:
        value = self.value
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"discriminant must be an int, got {type(value).__name__}")
        if value == 0:
            raise InvalidDiscriminantError(value, "zero")
        if value > 0 and integer_nthroot(value, 2)[1]:
            raise InvalidDiscriminantError(value, "square")
        if value % 4 not in (0, 1):
            raise InvalidDiscriminantError(value, "residue")

    def __str__(self) -> str:
        return str(self.value)

    @property
    def is_odd(self) -> bool:
        """True when D is 1 mod 4, i.e. omega = 1/2 + tau."""
        return self.value % 4 == 1

    def element(self, s: Rational = 0, t: Rational = 0) -> "QuadElem":
        """Build ``s + t*sqrt(D)``."""
        return QuadElem(Fraction(s), Fraction(t), self)

    def from_tau(self, c: Rational, a: Rational) -> "QuadElem":
        """Build ``c + a*tau``."""
        return QuadElem(Fraction(c), Fraction(a) / 2, self)

    def from_coordinates(self, x: Rational, y: Rational) -> "QuadElem":
        """Build ``x + y*omega``."""
        x, y = Fraction(x), Fraction(y)
        if self.is_odd:
            return QuadElem(x + y / 2, y / 2, self)
        return QuadElem(x, y / 2, self)

    @property
    def zero(self) -> "QuadElem":
        return self.element(0, 0)

    @property
    def one(self) -> "QuadElem":
        return self.element(1, 0)

    @property
    def tau(self) -> "QuadElem":
        return self.element(0, Fraction(1, 2))

    @property
    def omega(self) -> "QuadElem":
        return self.from_coordinates(0, 1)


@dataclass(frozen=True)
class QuadElem:
    """An exact element ``s + t*sqrt(D)`` of Q(sqrt(D)).

    Instances are immutable and hashable. Arithmetic with plain ints and
    Fractions is supported; mixing two discriminants raises
    DiscriminantMismatchError.
    """

    s: Fraction
    t: Fraction
    disc: Discriminant

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", Fraction(self.s))
        object.__setattr__(self, "t", Fraction(self.t))

    def _coerce(self, other: object) -> "QuadElem":
        if isinstance(other, QuadElem):
            if other.disc != self.disc:
                raise DiscriminantMismatchError(self.disc.value, other.disc.value)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadElem(Fraction(other), Fraction(0), self.disc)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "QuadElem":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(self.s + o.s, self.t + o.t, self.disc)

    __radd__ = __add__

    def __neg__(self) -> "QuadElem":
        return QuadElem(-self.s, -self.t, self.disc)

    def __sub__(self, other: object) -> "QuadElem":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(self.s - o.s, self.t - o.t, self.disc)

    def __rsub__(self, other: object) -> "QuadElem":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "QuadElem":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = self.disc.value
        return QuadElem(
            self.s * o.s + self.t * o.t * d,
            self.s * o.t + self.t * o.s,
            self.disc,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "QuadElem":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "QuadElem":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "QuadElem":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.disc.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.s) or bool(self.t)

    def conj(self) -> "QuadElem":
        """Return ``s - t*sqrt(D)``."""
        return QuadElem(self.s, -self.t, self.disc)

    def norm(self) -> Fraction:
        """Return ``s^2 - t^2*D``."""
        return self.s * self.s - self.t * self.t * self.disc.value

    def inverse(self) -> "QuadElem":
        """Return the multiplicative inverse.

        Raises:
            NotInvertibleError: If the element is zero
        """
        n = self.norm()
        if n == 0:
            raise NotInvertibleError("inverse of zero in Q(sqrt(D))")
        return QuadElem(self.s / n, -self.t / n, self.disc)

    def tau_split(self) -> Tuple[Fraction, Fraction]:
        """Return ``(c, a)`` with ``self = c + a*tau``."""
        return self.s, 2 * self.t

    def coordinates(self) -> Tuple[Fraction, Fraction]:
        """Return ``(x, y)`` with ``self = x + y*omega``."""
        y = 2 * self.t
        if self.disc.is_odd:
            return self.s - y / 2, y
        return self.s, y

    def is_in_ring(self) -> bool:
        """True iff the element lies in R_D."""
        twice_s = 2 * self.s
        twice_t = 2 * self.t
        if twice_s.denominator != 1 or twice_t.denominator != 1:
            return False
        return (twice_s.numerator - twice_t.numerator * self.disc.value) % 2 == 0

    def __str__(self) -> str:
        sign = "-" if self.t < 0 else "+"
        return f"{self.s}{sign}{abs(self.t)}*sqrt({self.disc.value})"

    @classmethod
    def parse(cls, text: str, disc: Discriminant) -> "QuadElem":
        """Parse ``"s+t*sqrt(D)"``; either part may be omitted.

        Raises:
            ParseError: On malformed text or a sqrt argument other than D
        """
        match = _ELEMENT_PATTERN.match(text)
        if not match or (match.group("s") is None and match.group("t") is None):
            raise ParseError(f"cannot parse field element {text!r}; expected 's+t*sqrt(D)'")
        try:
            s = Fraction(match.group("s") or 0)
            t = Fraction(match.group("t") or 0)
        except ZeroDivisionError as exc:
            raise ParseError(f"zero denominator in {text!r}") from exc
        if match.group("d") is not None and int(match.group("d")) != disc.value:
            raise ParseError(f"{text!r} uses sqrt({match.group('d')}) but D = {disc.value}")
        if match.group("sign") == "-":
            t = -t
        return cls(s, t, disc)


def norm(e: QuadElem) -> Fraction:
    """Return the field norm of ``e``."""
    return e.norm()


def inv(e: QuadElem) -> QuadElem:
    """Return the inverse of ``e``."""
    return e.inverse()


def is_in_ring(e: QuadElem) -> bool:
    """True iff ``e`` lies in R_D = Z + Z*omega."""
    return e.is_in_ring()


def orientation(a: QuadElem, b: QuadElem) -> Fraction:
    """Return ``(conj(a)*b - conj(b)*a) / sqrt(D)``, i.e. ``2*(s_a*t_b - s_b*t_a)``.

    Antisymmetric and Q-bilinear; on an ordered ideal basis it is the signed norm.
    """
    if a.disc != b.disc:
        raise DiscriminantMismatchError(a.disc.value, b.disc.value, "orientation")
    return 2 * (a.s * b.t - b.s * a.t)
