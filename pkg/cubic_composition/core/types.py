"""Report and payload record types for cubic-composition."""

from typing import Dict, List

from typing_extensions import Literal, NotRequired, TypedDict


class PairValidation(TypedDict):
    """Outcome of checking the two balanced-pair conditions."""

    cube_containment: bool
    norm_condition: bool
    signed_norm: str
    delta_norm: str
    passed: bool
    failures: List[str]


class FormPayload(TypedDict):
    """JSON shape of a cubic form in the triplicate convention."""

    a: List[int]


class CompositionPayload(TypedDict):
    """JSON shape of a composition result."""

    P: FormPayload
    X: List[int]
    Y: List[int]
    verified: bool


class EquivalencePayload(TypedDict):
    """JSON shape of an equivalence verdict."""

    status: Literal["equivalent", "not_found_within_bound"]
    witness: NotRequired[List[int]]
    depth: NotRequired[int]
    ceiling: NotRequired[int]
    explored: int


class GroupChecks(TypedDict):
    """Group axioms verified on a class table."""

    closure: bool
    identity: bool
    inverses: bool
    associativity: bool
    commutativity: bool
    exponent_three: bool


class ClassTablePayload(TypedDict):
    """JSON shape of a class table."""

    D: int
    reps: List[FormPayload]
    identity: int
    table: List[List[int]]
    checks: NotRequired[GroupChecks]


class MetricStats(TypedDict):
    """Summary of a recorded metric."""

    count: int
    min: float
    max: float
    avg: float


MetricStatsMap = Dict[str, MetricStats]


class CompositionVerification(TypedDict):
    """Identities checked symbolically on every composition."""

    defining_identity: bool
    covariant_identity: bool
    tilde_identity: bool
    passed: bool
