"""The composition law on projective cubic forms of a fixed discriminant.

Two forms ``p1, p2`` compose to ``P`` when integral bilinear ``X, Y`` satisfy

    P(X, Y) = p1'(x1, y1) * p2(x2, y2) + p1(x1, y1) * p2'(x2, y2)

``compose`` builds ``P`` from the product of the balanced pairs of ``p1`` and
``p2`` and checks the identity, its rational companion and the full tilde
identity with sympy before returning.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from sympy import Poly

from cubic_composition.bijection import form_to_pair, pair_product, pair_to_form
from cubic_composition.composition.multipoly import BilinearMap, Monomial, MultiPoly
from cubic_composition.core.cubicform import CubicForm
from cubic_composition.core.errors import (
    DiscriminantMismatchError,
    UnbalancedPairError,
    VerificationError,
)
from cubic_composition.core.idealmod import express_in_basis, product_generators
from cubic_composition.core.quadring import Discriminant, QuadElem
from cubic_composition.core.symbolic import X1, X2, Y1, Y2, BICUBIC_GENS, cubic_poly, to_sympy
from cubic_composition.core.types import CompositionPayload, CompositionVerification

logger = logging.getLogger(__name__)

Tilde = Tuple[QuadElem, QuadElem, QuadElem, QuadElem]


def _common_discriminant(*forms: CubicForm) -> Discriminant:
    values = {f.discriminant() for f in forms}
    if len(values) != 1:
        first, *rest = (f.discriminant() for f in forms)
        other = next(v for v in rest if v != first)
        raise DiscriminantMismatchError(first, other, "composition")
    return Discriminant(values.pop())


def _poly(coeffs, x, y) -> Poly:
    return cubic_poly(coeffs, x, y, gens=BICUBIC_GENS)


def tilde(f: CubicForm, disc: Optional[Discriminant] = None) -> Tilde:
    """Coefficients ``c_i + a_i*tau`` of ``p~ = p' + p*tau``."""
    disc = disc or Discriminant(f.discriminant())
    return tuple(  # type: ignore[return-value]
        disc.from_tau(c, a) for c, a in zip(f.covariant().coefficients, f.coefficients)
    )


def tilde_product(f1: CubicForm, f2: CubicForm) -> MultiPoly:
    """The bi-cubic product ``p1~(x1, y1) * p2~(x2, y2)``.

    Its tau-part is ``p1'p2 + p1p2'`` and its rational part is ``p1'p2' + p1p2*D/4``.

    Raises:
        DiscriminantMismatchError: If the forms have different discriminants
    """
    disc = _common_discriminant(f1, f2)
    left = MultiPoly.from_tilde(disc, tilde(f1, disc), slot=1)
    right = MultiPoly.from_tilde(disc, tilde(f2, disc), slot=2)
    return left * right


def defining_rhs(f1: CubicForm, f2: CubicForm) -> Poly:
    """``p1'(x1, y1) * p2(x2, y2) + p1(x1, y1) * p2'(x2, y2)`` as a sympy Poly."""
    c1, c2 = f1.covariant().coefficients, f2.covariant().coefficients
    return _poly(c1, X1, Y1) * _poly(f2.coefficients, X2, Y2) + _poly(
        f1.coefficients, X1, Y1
    ) * _poly(c2, X2, Y2)


def covariant_rhs(f1: CubicForm, f2: CubicForm) -> Poly:
    """``p1' * p2' + p1 * p2 * D/4`` as a sympy Poly."""
    d = f1.discriminant()
    c1, c2 = f1.covariant().coefficients, f2.covariant().coefficients
    rational = _poly(c1, X1, Y1) * _poly(c2, X2, Y2)
    forms = _poly(f1.coefficients, X1, Y1) * _poly(f2.coefficients, X2, Y2)
    return rational + forms * to_sympy(Fraction(d, 4))


@dataclass(frozen=True)
class CompositionResult:
    """A form ``P`` with the bilinear map that witnesses it as a composition."""

    P: CubicForm
    xy: BilinearMap
    verification: CompositionVerification

    @property
    def verified(self) -> bool:
        return self.verification["passed"]

    def to_json(self) -> CompositionPayload:
        return {
            "P": {"a": list(self.P.coefficients)},
            "X": list(self.xy.m),
            "Y": list(self.xy.n),
            "verified": self.verified,
        }

    def __str__(self) -> str:
        return f"P={self.P} {self.xy}"


def verify_composition(f1: CubicForm, f2: CubicForm, P: CubicForm, xy: BilinearMap) -> bool:
    """True iff ``P(X, Y) == p1'p2 + p1p2'`` as a polynomial identity in x1, y1, x2, y2."""
    if len({f1.discriminant(), f2.discriminant(), P.discriminant()}) != 1:
        return False
    big_x, big_y = xy.as_polys()
    lhs = _poly(P.coefficients, big_x, big_y)
    return (lhs - defining_rhs(f1, f2)).is_zero


def covariant_identity_check(
    f1: CubicForm, f2: CubicForm, P: CubicForm, xy: BilinearMap
) -> bool:
    """True iff ``P'(X, Y) == p1'p2' + p1p2*D/4``."""
    if len({f1.discriminant(), f2.discriminant(), P.discriminant()}) != 1:
        return False
    big_x, big_y = xy.as_polys()
    lhs = _poly(P.covariant().coefficients, big_x, big_y)
    return (lhs - covariant_rhs(f1, f2)).is_zero


def tilde_identity_check(f1: CubicForm, f2: CubicForm, P: CubicForm, xy: BilinearMap) -> bool:
    """True iff ``p1~(x1, y1) * p2~(x2, y2) == P~(X, Y)`` over Q(sqrt(D))."""
    if len({f1.discriminant(), f2.discriminant(), P.discriminant()}) != 1:
        return False
    disc = Discriminant(P.discriminant())
    expanded = MultiPoly.from_tilde_at_bilinear(disc, tilde(P, disc), xy)
    return expanded == tilde_product(f1, f2)


def verification_report(
    f1: CubicForm, f2: CubicForm, P: CubicForm, xy: BilinearMap
) -> CompositionVerification:
    defining = verify_composition(f1, f2, P, xy)
    rational = covariant_identity_check(f1, f2, P, xy)
    full = tilde_identity_check(f1, f2, P, xy)
    return {
        "defining_identity": defining,
        "covariant_identity": rational,
        "tilde_identity": full,
        "passed": defining and rational and full,
    }


def compose(f1: CubicForm, f2: CubicForm) -> CompositionResult:
    """Compose two projective forms of the same discriminant.

    The product ideal ``J1*J2`` gets its Hermite basis ``(alpha, beta)`` with the
    orientation sign of ``signed_norm(J1) * signed_norm(J2)``; writing the four
    products ``u1*u2, u1*v2, v1*u2, v1*v2`` in that basis gives X and Y, and
    ``P = pair_to_form(J1*J2, delta1*delta2)``.

    Args:
        f1: First projective form
        f2: Second projective form, with the same discriminant

    Returns:
        The composed form with its bilinear witness and a passed verification

    Raises:
        DiscriminantMismatchError: If the discriminants differ
        InvalidDiscriminantError: If the shared discriminant is not valid
        NotProjectiveError: If either form is not projective
        VerificationError: If a symbolic identity fails on the constructed result
    """
    disc = _common_discriminant(f1, f2)
    p1 = form_to_pair(f1, disc)
    p2 = form_to_pair(f2, disc)
    pair = pair_product(p1, p2)

    coords = [express_in_basis(g, pair.ideal) for g in product_generators(p1.ideal, p2.ideal)]
    xy = BilinearMap(
        tuple(m for m, _ in coords),  # type: ignore[arg-type]
        tuple(n for _, n in coords),  # type: ignore[arg-type]
    )
    try:
        P = pair_to_form(pair)
    except UnbalancedPairError as exc:
        raise VerificationError(f"product pair of {f1} and {f2} is not balanced") from exc

    verification = verification_report(f1, f2, P, xy)
    if not verification["passed"]:
        raise VerificationError(f"composition of {f1} and {f2} failed: {verification}")
    if not P.is_projective():
        raise VerificationError(f"composition of {f1} and {f2} gave non-projective {P}")
    logger.debug("compose %s * %s -> %s (%s)", f1, f2, P, xy)
    return CompositionResult(P, xy, verification)


def tau_expansion(f1: CubicForm, f2: CubicForm) -> Tuple[Tuple[Monomial, int], ...]:
    """The 16 coefficients of ``p1'p2 + p1p2'``, ordered from ``x1^3*x2^3`` down."""
    poly = defining_rhs(f1, f2)
    monomials = [(3 - i, i, 3 - j, j) for i in range(4) for j in range(4)]
    return tuple((m, int(poly.nth(*m))) for m in monomials)


__all__ = [
    "BilinearMap",
    "CompositionResult",
    "MultiPoly",
    "compose",
    "covariant_identity_check",
    "covariant_rhs",
    "defining_rhs",
    "tau_expansion",
    "tilde",
    "tilde_identity_check",
    "tilde_product",
    "verification_report",
    "verify_composition",
]
