"""Classes of projective cubic forms under SL2(Z) and the group they form.

Equivalence is decided by bounded search at the form level; a search that
finds nothing reports ``NOT_FOUND_WITHIN_BOUND`` and never "inequivalent".
"""

from cubic_composition.classgroup.elements import class_order, identity_form, inverse, power
from cubic_composition.classgroup.enumeration import (
    ClassTable,
    enumerate_classes,
    enumerate_forms,
    group_checks,
)
from cubic_composition.classgroup.search import (
    GENERATORS,
    MAX_DEPTH_ENV,
    EquivalenceStatus,
    EquivalenceVerdict,
    SearchConfig,
    equivalent,
    orbit_within_bound,
)

__all__ = [
    "ClassTable",
    "EquivalenceStatus",
    "EquivalenceVerdict",
    "GENERATORS",
    "MAX_DEPTH_ENV",
    "SearchConfig",
    "class_order",
    "enumerate_classes",
    "enumerate_forms",
    "equivalent",
    "group_checks",
    "identity_form",
    "inverse",
    "orbit_within_bound",
    "power",
]
