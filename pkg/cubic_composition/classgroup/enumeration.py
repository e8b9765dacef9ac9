"""Enumerate projective forms of a discriminant and rebuild their class table."""

import itertools
import logging
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Dict, List, Optional, Tuple, Union

from cubic_composition.classgroup.elements import identity_form
from cubic_composition.classgroup.search import SearchConfig, equivalent, orbit_within_bound
from cubic_composition.composition import compose
from cubic_composition.core.cubicform import CubicForm
from cubic_composition.core.errors import ClassLookupError, DomainError
from cubic_composition.core.quadring import Discriminant
from cubic_composition.core.types import ClassTablePayload, GroupChecks
from cubic_composition.observability import ComputationObserver

logger = logging.getLogger(__name__)


def _scan_a0(args: Tuple[int, int, int]) -> List[Tuple[int, int, int, int]]:
    d, bound, a0 = args
    found = []
    span = range(-bound, bound + 1)
    for a1, a2, a3 in itertools.product(span, span, span):
        f = CubicForm(a0, a1, a2, a3)
        if f.discriminant() == d and f.is_projective():
            found.append(f.coefficients)
    return found


def enumerate_forms(
    disc: Union[int, Discriminant], coeff_bound: int, workers: int = 1
) -> List[CubicForm]:
    """All projective forms of discriminant D with ``|a_i| <= coeff_bound``, in lexicographic order.

    Args:
        disc: The discriminant
        coeff_bound: Bound on the absolute value of every coefficient
        workers: Number of processes; the a0 range is split between them

    Returns:
        Sorted list of forms; the result does not depend on ``workers``
    """
    if not isinstance(disc, Discriminant):
        disc = Discriminant(disc)
    if coeff_bound < 0:
        raise DomainError(f"coefficient bound must be non-negative, got {coeff_bound}")
    jobs = [(disc.value, coeff_bound, a0) for a0 in range(-coeff_bound, coeff_bound + 1)]
    if workers > 1:
        with Pool(processes=workers) as pool:
            chunks = pool.map(_scan_a0, jobs)
    else:
        chunks = [_scan_a0(job) for job in jobs]
    return [CubicForm(*coeffs) for chunk in chunks for coeffs in chunk]


@dataclass(frozen=True)
class ClassTable:
    """Representatives of the classes found, and their composition table.

    ``table[i][j]`` is the index of the class of ``compose(reps[i], reps[j]).P``.
    """

    disc: Discriminant
    reps: Tuple[CubicForm, ...]
    identity: int
    table: Tuple[Tuple[int, ...], ...]
    checks: GroupChecks

    @property
    def order(self) -> int:
        return len(self.reps)

    def element_order(self, i: int) -> int:
        k, current = 1, i
        while current != self.identity:
            current = self.table[current][i]
            k += 1
            if k > self.order:
                raise DomainError(f"class {i} has no finite order in the table")
        return k

    def is_cyclic(self) -> bool:
        return any(self.element_order(i) == self.order for i in range(self.order))

    def to_json(self, include_checks: bool = False) -> ClassTablePayload:
        payload: ClassTablePayload = {
            "D": self.disc.value,
            "reps": [f.to_json() for f in self.reps],  # type: ignore[misc]
            "identity": self.identity,
            "table": [list(row) for row in self.table],
        }
        if include_checks:
            payload["checks"] = self.checks
        return payload


def group_checks(table: Tuple[Tuple[int, ...], ...], identity: int) -> GroupChecks:
    """Verify the group axioms and ``x*x*x == e`` on a full table."""
    n = len(table)
    idx = range(n)
    return {
        "closure": all(len(row) == n and all(0 <= v < n for v in row) for row in table),
        "identity": all(table[identity][i] == i and table[i][identity] == i for i in idx),
        "inverses": all(any(table[i][j] == identity for j in idx) for i in idx),
        "associativity": all(
            table[table[i][j]][k] == table[i][table[j][k]] for i in idx for j in idx for k in idx
        ),
        "commutativity": all(table[i][j] == table[j][i] for i in idx for j in idx),
        "exponent_three": all(table[table[i][i]][i] == identity for i in idx),
    }


class _ClassIndex:
    """Labels forms with class indices, exploring each representative's bounded orbit."""

    def __init__(
        self, config: SearchConfig, ceiling: int, observer: Optional[ComputationObserver]
    ):
        self.config = config
        self.ceiling = ceiling
        self.observer = observer
        self.reps: List[CubicForm] = []
        self.labels: Dict[CubicForm, int] = {}

    def add(self, f: CubicForm) -> int:
        index = len(self.reps)
        self.reps.append(f)
        for form in orbit_within_bound(f, self.ceiling, self.config.max_depth):
            self.labels.setdefault(form, index)
        return index

    def locate(self, f: CubicForm) -> Optional[int]:
        if f in self.labels:
            return self.labels[f]
        ceiling = max(self.ceiling, self.config.ceiling_for(f))
        for form in orbit_within_bound(f, ceiling, self.config.max_depth):
            if form in self.labels:
                self.labels[f] = self.labels[form]
                return self.labels[form]
        for index, rep in enumerate(self.reps):
            if equivalent(f, rep, self.config, self.observer):
                self.labels[f] = index
                return index
        return None


def enumerate_classes(
    disc: Union[int, Discriminant],
    coeff_bound: int,
    config: Optional[SearchConfig] = None,
    workers: int = 1,
    observer: Optional[ComputationObserver] = None,
) -> ClassTable:
    """Partition the bounded projective forms of discriminant D into classes and compose them.

    The least form (lexicographically) of each class is its representative.

    Args:
        disc: The discriminant
        coeff_bound: Bound on ``|a_i|`` for the candidate forms
        config: Equivalence search limits
        workers: Processes used for the candidate scan
        observer: Optional observer for ``enumeration.*`` metrics and a trace

    Returns:
        The class table with its group checks

    Raises:
        ClassLookupError: If a composition or the identity form cannot be placed
            among the representatives (the bound is too small)
    """
    if not isinstance(disc, Discriminant):
        disc = Discriminant(disc)
    config = config or SearchConfig()
    trace_id = f"classes:{disc.value}:{coeff_bound}"
    if observer is not None:
        observer.start_trace(
            trace_id, "enumerate_classes", {"D": disc.value, "bound": coeff_bound}
        )

    candidates = enumerate_forms(disc, coeff_bound, workers)
    logger.info(
        "D = %d: %d projective forms with |a_i| <= %d", disc.value, len(candidates), coeff_bound
    )
    index = _ClassIndex(config, config.ceiling_factor * max(1, coeff_bound), observer)
    for f in candidates:
        if index.locate(f) is None:
            index.add(f)
            if observer is not None:
                observer.log_event(trace_id, "class", f"new class represented by {f}")
    reps = tuple(index.reps)
    logger.info("D = %d: %d classes", disc.value, len(reps))

    def place(form: CubicForm, what: str) -> int:
        found = index.locate(form)
        if found is None:
            message = f"could not place {form} ({what}) among {len(reps)} classes"
            if observer is None:
                logger.warning(message)
            else:
                observer.log("warning", message, {"D": disc.value, "bound": coeff_bound})
                observer.end_trace(trace_id, status="failed")
            raise ClassLookupError(
                f"{what} {form} matches none of the {len(reps)} representatives; "
                f"increase the coefficient bound {coeff_bound} or the search depth"
            )
        return found

    identity = place(identity_form(disc), "identity form")
    table = tuple(
        tuple(place(compose(a, b).P, f"composition of {a} and {b}") for b in reps) for a in reps
    )
    checks = group_checks(table, identity)
    logger.info("D = %d: table built, checks %s", disc.value, checks)
    if observer is not None:
        failed = [name for name, ok in checks.items() if not ok]
        if failed:
            observer.log("warning", f"group checks failed: {', '.join(failed)}", {"D": disc.value})
        observer.record_metric("enumeration.candidates", len(candidates))
        observer.record_metric("enumeration.classes", len(reps))
        observer.end_trace(trace_id, result={"classes": len(reps)})
    return ClassTable(disc, reps, identity, table, checks)
