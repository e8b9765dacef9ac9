"""Binary cubic forms in the triplicate-coefficient convention.

A ``CubicForm(a0, a1, a2, a3)`` stands for the polynomial

    a0*x^3 + 3*a1*x^2*y + 3*a2*x*y^2 + a3*y^3

so the stored quadruple is NOT the list of displayed polynomial coefficients:
``-x^3 - 3x^2y + 3xy^2 + 4y^3`` is ``CubicForm(-1, -1, 1, 4)``.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, TypeVar, Union

from sympy import Poly, Rational

from cubic_composition.core.errors import (
    DiscriminantMismatchError,
    InternalError,
    NotUnimodularError,
    ParseError,
)
from cubic_composition.core.symbolic import X, Y, cubic_poly, quadratic_poly

N = TypeVar("N", int, Fraction)


def parse_ints(text: str, count: int, what: str) -> List[int]:
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != count:
        raise ParseError(f"{what} needs {count} comma-separated integers, got {text!r}")
    try:
        return [int(part) for part in parts]
    except ValueError as exc:
        raise ParseError(f"{what} needs integers, got {text!r}") from exc


@dataclass(frozen=True)
class Unimodular:
    """The matrix ``[[p, q], [r, s]]`` of SL2(Z), acting by ``f(px + qy, rx + sy)``."""

    p: int
    q: int
    r: int
    s: int

    def __post_init__(self) -> None:
        if self.p * self.s - self.q * self.r != 1:
            raise NotUnimodularError(
                f"matrix [[{self.p}, {self.q}], [{self.r}, {self.s}]] has determinant "
                f"{self.p * self.s - self.q * self.r}, expected 1"
            )

    @classmethod
    def identity(cls) -> "Unimodular":
        return cls(1, 0, 0, 1)

    def __matmul__(self, other: "Unimodular") -> "Unimodular":
        return Unimodular(
            self.p * other.p + self.q * other.r,
            self.p * other.q + self.q * other.s,
            self.r * other.p + self.s * other.r,
            self.r * other.q + self.s * other.s,
        )

    def inverse(self) -> "Unimodular":
        return Unimodular(self.s, -self.q, -self.r, self.p)

    @property
    def entries(self) -> Tuple[int, int, int, int]:
        return (self.p, self.q, self.r, self.s)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.entries)

    @classmethod
    def parse(cls, text: str) -> "Unimodular":
        """Parse ``"p,q,r,s"``."""
        return cls(*parse_ints(text, 4, "matrix"))


def _convolve(u: Sequence[N], v: Sequence[N]) -> List[N]:
    out: List = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        for j, b in enumerate(v):
            out[i + j] += a * b
    return out


def _substitute(expanded: Sequence[N], g: Unimodular) -> List[N]:
    """Expand ``sum e_i x^(3-i) y^i`` at ``(px + qy, rx + sy)``; returns plain coefficients."""
    first = (g.p, g.q)
    second = (g.r, g.s)
    result: List = [0, 0, 0, 0]
    for i, e in enumerate(expanded):
        if not e:
            continue
        term: List = [1]
        for _ in range(3 - i):
            term = _convolve(term, first)
        for _ in range(i):
            term = _convolve(term, second)
        for k in range(4):
            result[k] += e * term[k]
    return result


@dataclass(frozen=True)
class HessianQuad:
    """The quadratic form ``q0*x^2 + q1*x*y + q2*y^2``."""

    q0: int
    q1: int
    q2: int

    @property
    def coefficients(self) -> Tuple[int, int, int]:
        return (self.q0, self.q1, self.q2)

    def discriminant(self) -> int:
        return self.q1 * self.q1 - 4 * self.q0 * self.q2

    def content(self) -> int:
        return math.gcd(self.q0, self.q1, self.q2)

    def is_primitive(self) -> bool:
        return self.content() == 1

    def as_poly(self, x: object = X, y: object = Y) -> Poly:
        return quadratic_poly(self.coefficients, x, y)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.coefficients)


@dataclass(frozen=True)
class CovariantForm:
    """The half-integral companion form ``c0*x^3 + 3*c1*x^2*y + 3*c2*x*y^2 + c3*y^3``."""

    c0: Fraction
    c1: Fraction
    c2: Fraction
    c3: Fraction

    def __post_init__(self) -> None:
        for name in ("c0", "c1", "c2", "c3"):
            value = Fraction(getattr(self, name))
            if (2 * value).denominator != 1:
                raise ParseError(f"covariant coefficient {name} = {value} is not a half-integer")
            object.__setattr__(self, name, value)

    @property
    def coefficients(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c0, self.c1, self.c2, self.c3)

    def act(self, g: Unimodular) -> "CovariantForm":
        """Same substitution action as ``CubicForm.act``, on half-integral coefficients."""
        c0, c1, c2, c3 = self.coefficients
        b = _substitute((c0, 3 * c1, 3 * c2, c3), g)
        return CovariantForm(b[0], Fraction(b[1]) / 3, Fraction(b[2]) / 3, b[3])

    def as_poly(self, x: object = X, y: object = Y) -> Poly:
        return cubic_poly(self.coefficients, x, y)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.coefficients)


@dataclass(frozen=True, order=True)
class CubicForm:
    """An integral binary cubic form with triplicate central coefficients.

    Ordering is lexicographic on ``(a0, a1, a2, a3)``.
    """

    a0: int
    a1: int
    a2: int
    a3: int

    def __post_init__(self) -> None:
        for name in ("a0", "a1", "a2", "a3"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an int, got {value!r}")

    @property
    def coefficients(self) -> Tuple[int, int, int, int]:
        return (self.a0, self.a1, self.a2, self.a3)

    @property
    def height(self) -> int:
        """Largest absolute coefficient."""
        return max(abs(a) for a in self.coefficients)

    def expanded(self) -> Tuple[int, int, int, int]:
        """Displayed polynomial coefficients ``(a0, 3a1, 3a2, a3)``."""
        return (self.a0, 3 * self.a1, 3 * self.a2, self.a3)

    def __neg__(self) -> "CubicForm":
        return CubicForm(-self.a0, -self.a1, -self.a2, -self.a3)

    def discriminant(self) -> int:
        a0, a1, a2, a3 = self.coefficients
        return (
            a0 * a0 * a3 * a3
            - 3 * a1 * a1 * a2 * a2
            + 4 * a1**3 * a3
            + 4 * a0 * a2**3
            - 6 * a0 * a1 * a2 * a3
        )

    def hessian(self) -> HessianQuad:
        # Middle coefficient a1*a2 - a0*a3 makes p'^2 - (D/4)p^2 = q^3 exact.
        a0, a1, a2, a3 = self.coefficients
        return HessianQuad(a1 * a1 - a0 * a2, a1 * a2 - a0 * a3, a2 * a2 - a1 * a3)

    def is_projective(self) -> bool:
        return self.hessian().is_primitive()

    def act(self, g: Unimodular) -> "CubicForm":
        """Return ``f(px + qy, rx + sy)``; a right action: ``f.act(g).act(h) == f.act(g @ h)``."""
        b = _substitute(self.expanded(), g)
        if b[1] % 3 or b[2] % 3:
            raise InternalError(f"substitution of {self} by {g} broke the triplicate convention")
        return CubicForm(b[0], b[1] // 3, b[2] // 3, b[3])

    def covariant(self) -> CovariantForm:
        a0, a1, a2, a3 = self.coefficients
        half = Fraction(1, 2)
        return CovariantForm(
            half * (2 * a1**3 - 3 * a0 * a1 * a2 + a0 * a0 * a3),
            half * (a1 * a1 * a2 - 2 * a0 * a2 * a2 + a0 * a1 * a3),
            -half * (a1 * a2 * a2 - 2 * a1 * a1 * a3 + a0 * a2 * a3),
            -half * (2 * a2**3 - 3 * a1 * a2 * a3 + a0 * a3 * a3),
        )

    def evaluate(self, x: int, y: int) -> int:
        a0, a1, a2, a3 = self.coefficients
        return a0 * x**3 + 3 * a1 * x * x * y + 3 * a2 * x * y * y + a3 * y**3

    def as_poly(self, x: object = X, y: object = Y) -> Poly:
        return cubic_poly(self.coefficients, x, y)

    def to_json(self) -> Dict[str, List[int]]:
        return {"a": list(self.coefficients)}

    @classmethod
    def from_json(cls, payload: Dict[str, List[int]]) -> "CubicForm":
        values = payload.get("a") if isinstance(payload, dict) else None
        if not isinstance(values, list) or len(values) != 4:
            raise ParseError(f"expected {{'a': [a0, a1, a2, a3]}}, got {payload!r}")
        return cls(*(int(v) for v in values))

    @classmethod
    def from_expanded(cls, b0: int, b1: int, b2: int, b3: int) -> "CubicForm":
        """Build from raw polynomial coefficients ``b0*x^3 + b1*x^2*y + b2*x*y^2 + b3*y^3``."""
        if b1 % 3 or b2 % 3:
            raise ParseError(
                f"x^2y and xy^2 coefficients ({b1}, {b2}) must be divisible by 3 "
                "for a form with triplicate central coefficients"
            )
        return cls(b0, b1 // 3, b2 // 3, b3)

    @classmethod
    def parse(cls, text: str, expanded: bool = False) -> "CubicForm":
        """Parse ``"a0,a1,a2,a3"`` (or raw coefficients when ``expanded``)."""
        values = parse_ints(text, 4, "cubic form")
        if expanded:
            return cls.from_expanded(*values)
        return cls(*values)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.coefficients)


def discriminant(f: CubicForm) -> int:
    return f.discriminant()


def hessian(f: CubicForm) -> HessianQuad:
    return f.hessian()


def hessian_discriminant(f: CubicForm) -> int:
    """Discriminant of the Hessian quadratic; agrees with ``discriminant(f)``."""
    return f.hessian().discriminant()


def is_projective(f: CubicForm) -> bool:
    return f.is_projective()


def act(f: Union[CubicForm, CovariantForm], g: Unimodular) -> Union[CubicForm, CovariantForm]:
    return f.act(g)


def covariant(f: CubicForm) -> CovariantForm:
    return f.covariant()


def syzygy_check(f: CubicForm, disc: Union[int, None] = None) -> bool:
    """Check ``p'(x,y)^2 - (D/4) p(x,y)^2 == q(x,y)^3`` as a polynomial identity.

    Args:
        f: The cubic form p
        disc: Expected discriminant; defaults to ``discriminant(f)``

    Returns:
        True if the identity holds after full expansion
    """
    d = f.discriminant()
    if disc is not None and disc != d:
        raise DiscriminantMismatchError(d, disc, "syzygy_check")
    lhs = f.covariant().as_poly() ** 2 - f.as_poly() ** 2 * Rational(d, 4)
    return (lhs - f.hessian().as_poly() ** 3).is_zero
