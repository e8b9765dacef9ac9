"""
cubic-composition: Gauss composition of projective binary cubic forms

Exact arithmetic in quadratic orders, the bijection between cubic forms and
balanced pairs, the composition law with symbolic verification, and
reconstruction of the class group at a fixed discriminant.
"""

__version__ = "0.1.0"

# Core exports
from cubic_composition.core import (
    BalancedPair,
    CovariantForm,
    CubicForm,
    Discriminant,
    HessianQuad,
    OrientedIdeal,
    QuadElem,
    Unimodular,
)

# Feature exports
from cubic_composition.bijection import form_to_pair, pair_to_form
from cubic_composition.composition import CompositionResult, compose, verify_composition
from cubic_composition.classgroup import (
    ClassTable,
    SearchConfig,
    enumerate_classes,
    equivalent,
    identity_form,
)
from cubic_composition.observability import ComputationObserver

__all__ = [
    "__version__",
    "BalancedPair",
    "ClassTable",
    "CompositionResult",
    "ComputationObserver",
    "CovariantForm",
    "CubicForm",
    "Discriminant",
    "HessianQuad",
    "OrientedIdeal",
    "QuadElem",
    "SearchConfig",
    "Unimodular",
    "compose",
    "enumerate_classes",
    "equivalent",
    "form_to_pair",
    "identity_form",
    "pair_to_form",
    "verify_composition",
]
