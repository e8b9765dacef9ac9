"""Core value types: field elements, cubic forms and oriented ideals."""

from cubic_composition.core.cubicform import (
    CovariantForm,
    CubicForm,
    HessianQuad,
    Unimodular,
    act,
    covariant,
    discriminant,
    hessian,
    hessian_discriminant,
    is_projective,
    syzygy_check,
)
from cubic_composition.core.idealmod import (
    BalancedPair,
    OrientedIdeal,
    express_in_basis,
    hnf,
    product,
    same_module,
    signed_norm,
    validate_pair,
)
from cubic_composition.core.quadring import (
    Discriminant,
    QuadElem,
    inv,
    is_in_ring,
    norm,
    orientation,
)

__all__ = [
    "BalancedPair",
    "CovariantForm",
    "CubicForm",
    "Discriminant",
    "HessianQuad",
    "OrientedIdeal",
    "QuadElem",
    "Unimodular",
    "act",
    "covariant",
    "discriminant",
    "express_in_basis",
    "hessian",
    "hessian_discriminant",
    "hnf",
    "inv",
    "is_in_ring",
    "is_projective",
    "norm",
    "orientation",
    "product",
    "same_module",
    "signed_norm",
    "syzygy_check",
    "validate_pair",
]
