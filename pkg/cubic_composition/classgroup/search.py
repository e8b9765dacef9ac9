"""Bounded SL2(Z)-equivalence search on cubic forms.

Forms are explored by right multiplication with ``T = [[1, 1], [0, 1]]``, its
inverse and ``S = [[0, -1], [1, 0]]``. Any form whose height exceeds the
ceiling is pruned, so a failed search only means "not found within bound".
"""

import logging
import os
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from cubic_composition.core.cubicform import CubicForm, Unimodular
from cubic_composition.core.errors import DiscriminantMismatchError, DomainError, InternalError
from cubic_composition.core.types import EquivalencePayload
from cubic_composition.observability import ComputationObserver

logger = logging.getLogger(__name__)

MAX_DEPTH_ENV = "CUBIC_EQUIV_MAX_DEPTH"

GENERATORS: Tuple[Unimodular, ...] = (
    Unimodular(1, 1, 0, 1),
    Unimodular(1, -1, 0, 1),
    Unimodular(0, -1, 1, 0),
)


@dataclass(frozen=True)
class SearchConfig:
    """Limits of the equivalence search.

    Attributes:
        max_depth: Number of breadth-first levels, summed over both directions
        ceiling_factor: Forms higher than this multiple of the inputs' height are pruned
    """

    max_depth: int = 24
    ceiling_factor: int = 64

    def __post_init__(self) -> None:
        if self.max_depth < 0:
            raise DomainError(f"max_depth must be non-negative, got {self.max_depth}")
        if self.ceiling_factor < 1:
            raise DomainError(f"ceiling_factor must be positive, got {self.ceiling_factor}")

    def ceiling_for(self, *forms: CubicForm) -> int:
        return self.ceiling_factor * max(1, *(f.height for f in forms))

    @classmethod
    def from_env(cls, max_depth: Optional[int] = None) -> "SearchConfig":
        """Build a config, taking ``max_depth`` from ``CUBIC_EQUIV_MAX_DEPTH`` unless given.

        Raises:
            DomainError: If the environment value is not a positive integer
        """
        if max_depth is None:
            raw = os.environ.get(MAX_DEPTH_ENV)
            if raw is None or raw.strip() == "":
                return cls()
            try:
                max_depth = int(raw)
            except ValueError as exc:
                raise DomainError(f"{MAX_DEPTH_ENV}={raw!r} is not an integer") from exc
            if max_depth <= 0:
                raise DomainError(f"{MAX_DEPTH_ENV}={raw!r} must be positive")
        return cls(max_depth=max_depth)


class EquivalenceStatus(Enum):
    EQUIVALENT = "equivalent"
    NOT_FOUND_WITHIN_BOUND = "not_found_within_bound"


@dataclass(frozen=True)
class EquivalenceVerdict:
    """Outcome of ``equivalent``; a witness g always satisfies ``f.act(g) == h``."""

    status: EquivalenceStatus
    explored: int
    witness: Optional[Unimodular] = None
    depth: Optional[int] = None
    ceiling: Optional[int] = None

    @property
    def is_equivalent(self) -> bool:
        return self.status is EquivalenceStatus.EQUIVALENT

    def __bool__(self) -> bool:
        return self.is_equivalent

    def to_json(self) -> EquivalencePayload:
        payload: EquivalencePayload = {
            "status": self.status.value,  # type: ignore[typeddict-item]
            "explored": self.explored,
        }
        if self.witness is not None:
            payload["witness"] = list(self.witness.entries)
        if self.depth is not None:
            payload["depth"] = self.depth
        if self.ceiling is not None:
            payload["ceiling"] = self.ceiling
        return payload

    def __str__(self) -> str:
        if self.is_equivalent:
            return f"equivalent {self.witness}"
        return f"not found within bound (depth {self.depth}, ceiling {self.ceiling})"


def _expand(
    frontier: List[CubicForm], seen: Dict[CubicForm, Unimodular], ceiling: int
) -> List[CubicForm]:
    reached = []
    for form in frontier:
        word = seen[form]
        for g in GENERATORS:
            nxt = form.act(g)
            if nxt.height > ceiling or nxt in seen:
                continue
            seen[nxt] = word @ g
            reached.append(nxt)
    return reached


def orbit_within_bound(
    f: CubicForm, ceiling: int, max_depth: int
) -> Dict[CubicForm, Unimodular]:
    """Every form reachable from ``f`` within ``max_depth`` generator steps below ``ceiling``.

    Returns:
        Mapping from each reached form ``k`` to a matrix ``g`` with ``f.act(g) == k``
    """
    seen: Dict[CubicForm, Unimodular] = {f: Unimodular.identity()}
    frontier = [f]
    for _ in range(max_depth):
        frontier = _expand(frontier, seen, ceiling)
        if not frontier:
            break
    return seen


def equivalent(
    f: CubicForm,
    h: CubicForm,
    config: Optional[SearchConfig] = None,
    observer: Optional[ComputationObserver] = None,
) -> EquivalenceVerdict:
    """Search for ``g`` in SL2(Z) with ``f.act(g) == h``.

    The search grows breadth-first from both ends, always extending the smaller
    frontier, and stops at the first form reached from both sides.

    Args:
        f: Source form
        h: Target form, with the same discriminant
        config: Search limits; defaults to ``SearchConfig()``
        observer: Optional observer receiving ``search.explored`` and ``search.depth``

    Returns:
        ``EQUIVALENT`` with a verified witness, or ``NOT_FOUND_WITHIN_BOUND``

    Raises:
        DiscriminantMismatchError: If the discriminants differ
    """
    if f.discriminant() != h.discriminant():
        raise DiscriminantMismatchError(f.discriminant(), h.discriminant(), "equivalent")
    config = config or SearchConfig()
    ceiling = config.ceiling_for(f, h)

    forward: Dict[CubicForm, Unimodular] = {f: Unimodular.identity()}
    backward: Dict[CubicForm, Unimodular] = {h: Unimodular.identity()}
    f_frontier, b_frontier = [f], [h]
    witness: Optional[Unimodular] = None
    depth = 0
    if f == h:
        witness = Unimodular.identity()

    while witness is None and depth < config.max_depth and f_frontier and b_frontier:
        depth += 1
        if len(f_frontier) <= len(b_frontier):
            f_frontier = _expand(f_frontier, forward, ceiling)
            meet = next((k for k in f_frontier if k in backward), None)
        else:
            b_frontier = _expand(b_frontier, backward, ceiling)
            meet = next((k for k in b_frontier if k in forward), None)
        if meet is not None:
            witness = forward[meet] @ backward[meet].inverse()

    explored = len(forward) + len(backward)
    if observer is not None:
        observer.record_metric("search.explored", explored)
        observer.record_metric("search.depth", depth)

    if witness is None:
        logger.info("no witness for %s ~ %s (depth %d, ceiling %d)", f, h, depth, ceiling)
        return EquivalenceVerdict(
            EquivalenceStatus.NOT_FOUND_WITHIN_BOUND,
            explored,
            depth=config.max_depth,
            ceiling=ceiling,
        )
    if f.act(witness) != h:
        raise InternalError(f"witness {witness} does not map {f} to {h}")
    logger.debug("witness %s for %s ~ %s after %d levels", witness, f, h, depth)
    return EquivalenceVerdict(
        EquivalenceStatus.EQUIVALENT, explored, witness=witness, depth=depth, ceiling=ceiling
    )
