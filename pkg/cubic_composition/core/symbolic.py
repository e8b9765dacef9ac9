"""Shared sympy plumbing for exact polynomial identities."""

from fractions import Fraction
from typing import Sequence, Tuple, Union

from sympy import Poly, QQ, Rational, symbols

X, Y = symbols("x y")
X1, Y1, X2, Y2 = symbols("x1 y1 x2 y2")
BICUBIC_GENS = (X1, Y1, X2, Y2)

Number = Union[int, Fraction]


def to_sympy(value: Number) -> Rational:
    """Convert an exact int/Fraction to a sympy Rational."""
    q = Fraction(value)
    return Rational(q.numerator, q.denominator)


def from_sympy(value: object) -> Fraction:
    """Convert a sympy rational coefficient back to a Fraction."""
    q = Rational(value)
    return Fraction(int(q.p), int(q.q))


def cubic_poly(coeffs: Sequence[Number], x: object, y: object, gens: Tuple = (X, Y)) -> Poly:
    """Return ``c0*x^3 + 3*c1*x^2*y + 3*c2*x*y^2 + c3*y^3`` as a Poly over QQ.

    ``x`` and ``y`` may be generators or Polys over the same generators.
    """
    c0, c1, c2, c3 = (to_sympy(c) for c in coeffs)
    px = x if isinstance(x, Poly) else Poly(x, *gens, domain=QQ)
    py = y if isinstance(y, Poly) else Poly(y, *gens, domain=QQ)
    return px**3 * c0 + px**2 * py * (3 * c1) + px * py**2 * (3 * c2) + py**3 * c3


def quadratic_poly(coeffs: Sequence[Number], x: object, y: object, gens: Tuple = (X, Y)) -> Poly:
    """Return ``q0*x^2 + q1*x*y + q2*y^2`` as a Poly over QQ."""
    q0, q1, q2 = (to_sympy(c) for c in coeffs)
    px = x if isinstance(x, Poly) else Poly(x, *gens, domain=QQ)
    py = y if isinstance(y, Poly) else Poly(y, *gens, domain=QQ)
    return px**2 * q0 + px * py * q1 + py**2 * q2


def bilinear_poly(coeffs: Sequence[int]) -> Poly:
    """Return ``k1*x1*x2 + k2*x1*y2 + k3*y1*x2 + k4*y1*y2`` over the bi-cubic generators."""
    k1, k2, k3, k4 = coeffs
    return Poly(k1 * X1 * X2 + k2 * X1 * Y2 + k3 * Y1 * X2 + k4 * Y1 * Y2, *BICUBIC_GENS, domain=QQ)
