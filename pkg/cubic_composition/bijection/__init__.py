"""Both directions of the correspondence between cubic forms and balanced pairs.

A projective form ``p = (a0, a1, a2, a3)`` of discriminant D goes to the pair
``(Z*alpha + Z*beta, alpha*beta)`` with ``alpha = c1 + a1*tau`` and
``beta = c2 + a2*tau``, where ``c1, c2`` are the middle coefficients of the
covariant ``p'``. A pair goes back to the form whose coefficients are the
tau-parts of ``delta^-1 * alpha^(3-i) * beta^i``.
"""

import logging
from typing import Optional, Tuple

from cubic_composition.core.cubicform import CubicForm
from cubic_composition.core.errors import (
    DegenerateBasisError,
    DiscriminantMismatchError,
    InternalError,
    NotAnIdealError,
    NotProjectiveError,
    UnbalancedPairError,
)
from cubic_composition.core.idealmod import BalancedPair, OrientedIdeal, product
from cubic_composition.core.quadring import Discriminant, QuadElem

logger = logging.getLogger(__name__)


def _discriminant_of(f: CubicForm, disc: Optional[Discriminant]) -> Discriminant:
    value = f.discriminant()
    if disc is not None and disc.value != value:
        raise DiscriminantMismatchError(value, disc.value, f"form {f}")
    return disc if disc is not None else Discriminant(value)


def form_to_pair(f: CubicForm, disc: Optional[Discriminant] = None) -> BalancedPair:
    """Map a projective form to its balanced pair ``(J, delta)``.

    The basis ``(alpha, beta)`` is kept in the given order even when its
    orientation is negative.

    Args:
        f: A projective cubic form
        disc: Expected discriminant; defaults to ``Discriminant(discriminant(f))``

    Returns:
        The pair with ``J = Z*alpha + Z*beta`` and ``delta = alpha*beta``

    Raises:
        InvalidDiscriminantError: If ``discriminant(f)`` is not a valid D
        NotProjectiveError: If the Hessian of ``f`` is not primitive
    """
    disc = _discriminant_of(f, disc)
    if not f.is_projective():
        raise NotProjectiveError(f"form {f} is not projective (Hessian {f.hessian()})")
    cov = f.covariant()
    alpha = disc.from_tau(cov.c1, f.a1)
    beta = disc.from_tau(cov.c2, f.a2)
    try:
        ideal = OrientedIdeal(alpha, beta)
    except (DegenerateBasisError, NotAnIdealError) as exc:
        raise InternalError(f"form {f} produced an invalid ideal basis") from exc
    pair = BalancedPair(ideal, alpha * beta)
    logger.debug("form_to_pair %s -> %s", f, pair)
    return pair


def read_pair(pair: BalancedPair) -> Tuple[CubicForm, Tuple]:
    """Read ``(c_i, a_i)`` off ``delta^-1 * alpha^(3-i) * beta^i = c_i + a_i*tau``.

    Returns:
        The form ``(a0, a1, a2, a3)`` and the half-integral ``(c0, c1, c2, c3)``

    Raises:
        UnbalancedPairError: If some ``a_i`` is not an integer or ``2*c_i`` is not
    """
    a_values = []
    c_values = []
    for i, quotient in enumerate(pair.cube_quotients()):
        c, a = quotient.tau_split()
        if a.denominator != 1:
            raise UnbalancedPairError(f"a{i} = {a} read off {pair} is not an integer")
        if (2 * c).denominator != 1:
            raise UnbalancedPairError(f"c{i} = {c} read off {pair} is not a half-integer")
        a_values.append(int(a))
        c_values.append(c)
    return CubicForm(*a_values), tuple(c_values)


def pair_to_form(pair: BalancedPair) -> CubicForm:
    """Map a balanced pair back to its cubic form.

    Raises:
        UnbalancedPairError: If the read-off is not integral, the discriminant
            is not D, or the rational parts disagree with the covariant
    """
    form, c_values = read_pair(pair)
    if form.discriminant() != pair.disc.value:
        raise UnbalancedPairError(
            f"form {form} read off {pair} has discriminant {form.discriminant()}, "
            f"expected {pair.disc.value}"
        )
    if c_values != form.covariant().coefficients:
        raise UnbalancedPairError(f"rational parts of {pair} do not match the covariant of {form}")
    logger.debug("pair_to_form %s -> %s", pair, form)
    return form


def lemma_check(f: CubicForm, pair: BalancedPair) -> bool:
    """True iff ``delta^-1 (alpha x + beta y)^3 == p'(x, y) + p(x, y)*tau`` coefficientwise."""
    if pair.disc.value != f.discriminant():
        return False
    expected = zip(f.covariant().coefficients, f.coefficients)
    return all(
        quotient == pair.disc.from_tau(c, a)
        for quotient, (c, a) in zip(pair.cube_quotients(), expected)
    )


def tilde_from_pair(pair: BalancedPair) -> Tuple[QuadElem, QuadElem, QuadElem, QuadElem]:
    """Triplicate coefficients of ``delta^-1 (alpha x + beta y)^3``."""
    return pair.cube_quotients()


def scale_pair(pair: BalancedPair, kappa: QuadElem) -> BalancedPair:
    """The equivalent pair ``(kappa*J, kappa^3*delta)``; ``pair_to_form`` is unchanged by it."""
    return BalancedPair(pair.ideal.scale(kappa), kappa**3 * pair.delta)


def pair_product(p1: BalancedPair, p2: BalancedPair) -> BalancedPair:
    """``(J1*J2, delta1*delta2)`` with the Hermite basis oriented by the product of signs."""
    return BalancedPair(product(p1.ideal, p2.ideal), p1.delta * p2.delta)


__all__ = [
    "form_to_pair",
    "lemma_check",
    "pair_product",
    "pair_to_form",
    "read_pair",
    "scale_pair",
    "tilde_from_pair",
]
