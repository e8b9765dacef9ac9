"""Group operations on classes of projective forms: identity, inverse, powers, orders."""

import logging
from typing import Optional, Union

from cubic_composition.bijection import pair_to_form
from cubic_composition.classgroup.search import SearchConfig, equivalent
from cubic_composition.composition import compose
from cubic_composition.core.cubicform import CubicForm
from cubic_composition.core.errors import ClassLookupError, NotProjectiveError
from cubic_composition.core.idealmod import BalancedPair
from cubic_composition.core.quadring import Discriminant
from cubic_composition.observability import ComputationObserver

logger = logging.getLogger(__name__)


def identity_form(disc: Union[int, Discriminant]) -> CubicForm:
    """The form of the unit pair ``(R_D, 1)`` with basis ``(1, omega)``.

    ``(0, 1, 0, D/4)`` when D is 0 mod 4 and ``(0, 1, 1, (D+3)/4)`` when D is 1 mod 4.
    """
    if not isinstance(disc, Discriminant):
        disc = Discriminant(disc)
    return pair_to_form(BalancedPair.unit(disc))


def inverse(f: CubicForm) -> CubicForm:
    """A form in the inverse class: every class has order dividing 3, so ``f*f`` works."""
    return compose(f, f).P


def power(f: CubicForm, n: int) -> CubicForm:
    """A representative of the n-th power of the class of ``f``."""
    if not f.is_projective():
        raise NotProjectiveError(f"form {f} is not projective")
    if n < 0:
        return power(inverse(f), -n)
    if n == 0:
        return identity_form(f.discriminant())
    result = f
    for _ in range(n - 1):
        result = compose(result, f).P
    return result


def class_order(
    f: CubicForm,
    config: Optional[SearchConfig] = None,
    observer: Optional[ComputationObserver] = None,
) -> int:
    """Order of the class of ``f``: the least k in 1..3 with ``f^k`` equivalent to the identity.

    Raises:
        ClassLookupError: If no power up to 3 is found equivalent to the identity
            within the search bound
    """
    identity = identity_form(f.discriminant())
    current = f
    for k in range(1, 4):
        if equivalent(current, identity, config, observer):
            logger.debug("class of %s has order %d", f, k)
            return k
        current = compose(current, f).P
    raise ClassLookupError(f"no power of {f} up to 3 was matched with the identity within bound")
