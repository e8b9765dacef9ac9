"""Oriented rank-2 R_D-modules and balanced pairs.

An ``OrientedIdeal`` is an ordered Z-basis ``(alpha, beta)`` of a lattice in
Q(sqrt(D)) that is stable under multiplication by omega. The order of the basis
carries a sign: ``signed_norm(J) = orientation(alpha, beta)``, which for an
integral ideal is plus or minus its index in R_D.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple

from sympy.core.intfunc import igcdex

from cubic_composition.core.errors import (
    DegenerateBasisError,
    DiscriminantMismatchError,
    DomainError,
    InternalError,
    NotAnIdealError,
    NotInModuleError,
    NotInvertibleError,
)
from cubic_composition.core.quadring import Discriminant, QuadElem, orientation
from cubic_composition.core.types import PairValidation

logger = logging.getLogger(__name__)

# (content denominator, a, b, c): the lattice (1/d) * [(a + b*omega)Z + (c*omega)Z]
LatticeKey = Tuple[int, int, int, int]


def _solve(e: QuadElem, alpha: QuadElem, beta: QuadElem) -> Tuple[Fraction, Fraction]:
    det = orientation(alpha, beta)
    return orientation(e, beta) / det, orientation(alpha, e) / det


def _hermite_rows(rows: Iterable[Tuple[int, int]]) -> Tuple[int, int, int]:
    """Reduce integer row vectors spanning a rank-2 lattice in Z^2.

    Returns ``(a, b, c)`` with the lattice spanned by ``(a, b)`` and ``(0, c)``,
    ``a > 0``, ``c > 0`` and ``0 <= b < c``. Returns zeros in place of a missing
    pivot; callers treat that as degenerate.
    """
    a, b, c = 0, 0, 0
    for x, y in rows:
        if x == 0:
            c = math.gcd(c, y)
            continue
        if a == 0:
            a, b = x, y
            continue
        u, v, g = (int(k) for k in igcdex(a, x))
        # [[u, v], [x/g, -a/g]] has determinant -1, so the lattice is unchanged.
        c = math.gcd(c, (x * b - a * y) // g)
        a, b = g, u * b + v * y
    if a < 0:
        a, b = -a, -b
    if c:
        b %= c
    return a, b, c


@dataclass(frozen=True)
class OrientedIdeal:
    """An ordered basis ``(alpha, beta)`` of an R_D-module of rank 2.

    Raises:
        DegenerateBasisError: If ``orientation(alpha, beta) == 0``
        NotAnIdealError: If omega*alpha or omega*beta leaves the lattice
    """

    alpha: QuadElem
    beta: QuadElem

    def __post_init__(self) -> None:
        if self.alpha.disc != self.beta.disc:
            raise DiscriminantMismatchError(
                self.alpha.disc.value, self.beta.disc.value, "ideal basis"
            )
        if orientation(self.alpha, self.beta) == 0:
            raise DegenerateBasisError(f"basis ({self.alpha}, {self.beta}) is linearly dependent")
        omega = self.disc.omega
        for gen in (self.alpha, self.beta):
            m, n = _solve(omega * gen, self.alpha, self.beta)
            if m.denominator != 1 or n.denominator != 1:
                raise NotAnIdealError(
                    f"lattice [{self.alpha}; {self.beta}] is not closed under omega"
                )

    @property
    def disc(self) -> Discriminant:
        return self.alpha.disc

    @property
    def basis(self) -> Tuple[QuadElem, QuadElem]:
        return (self.alpha, self.beta)

    @classmethod
    def unit(cls, disc: Discriminant) -> "OrientedIdeal":
        """R_D with its positively oriented basis ``(1, omega)``."""
        return cls(disc.one, disc.omega)

    def signed_norm(self) -> Fraction:
        return orientation(self.alpha, self.beta)

    def lattice_key(self) -> LatticeKey:
        """Canonical invariant of the underlying Z-module (ignores basis order and sign)."""
        return _lattice_key(self.basis)

    def is_integral(self) -> bool:
        return self.alpha.is_in_ring() and self.beta.is_in_ring()

    def index(self) -> int:
        """Index of an integral ideal in R_D, from its Hermite basis."""
        d, a, _, c = self.lattice_key()
        if d != 1:
            raise DomainError(f"ideal {self} is not integral")
        return a * c

    def contains(self, e: QuadElem) -> bool:
        m, n = _solve(e, self.alpha, self.beta)
        return m.denominator == 1 and n.denominator == 1

    def scale(self, kappa: QuadElem) -> "OrientedIdeal":
        """Return ``kappa * J``; the orientation is multiplied by ``norm(kappa)``."""
        return OrientedIdeal(kappa * self.alpha, kappa * self.beta)

    def to_json(self) -> dict:
        return {"alpha": str(self.alpha), "beta": str(self.beta)}

    def __str__(self) -> str:
        return f"[{self.alpha}; {self.beta}]"


def _lattice_key(elements: Iterable[QuadElem]) -> LatticeKey:
    coords = [e.coordinates() for e in elements]
    d = 1
    for x, y in coords:
        d = d * x.denominator // math.gcd(d, x.denominator)
        d = d * y.denominator // math.gcd(d, y.denominator)
    rows = [(int(x * d), int(y * d)) for x, y in coords]
    a, b, c = _hermite_rows(rows)
    if a == 0 or c == 0:
        raise DegenerateBasisError("generators do not span a rank-2 lattice")
    return d, a, b, c


def _from_key(disc: Discriminant, key: LatticeKey, sign: int) -> OrientedIdeal:
    d, a, b, c = key
    alpha = disc.from_coordinates(Fraction(a, d), Fraction(b, d))
    beta = disc.from_coordinates(0, Fraction(sign * c, d))
    return OrientedIdeal(alpha, beta)


def signed_norm(J: OrientedIdeal) -> Fraction:
    """Oriented norm ``orientation(alpha, beta)``."""
    return J.signed_norm()


def hnf(J: OrientedIdeal) -> OrientedIdeal:
    """Canonical basis ``((a + b*omega)/d, +-c*omega/d)`` of the same module.

    The sign of the second vector reproduces the orientation sign of ``J``, so
    ``signed_norm(hnf(J)) == signed_norm(J)``; the function is idempotent.
    """
    sign = 1 if J.signed_norm() > 0 else -1
    return _from_key(J.disc, J.lattice_key(), sign)


def same_module(J1: OrientedIdeal, J2: OrientedIdeal) -> bool:
    """True iff both bases span the same Z-module."""
    return J1.disc == J2.disc and J1.lattice_key() == J2.lattice_key()


def product_generators(J1: OrientedIdeal, J2: OrientedIdeal) -> Tuple[QuadElem, ...]:
    """``(u1*u2, u1*v2, v1*u2, v1*v2)`` for bases ``(u1, v1)`` and ``(u2, v2)``."""
    u1, v1 = J1.basis
    u2, v2 = J2.basis
    return (u1 * u2, u1 * v2, v1 * u2, v1 * v2)


def product(J1: OrientedIdeal, J2: OrientedIdeal) -> OrientedIdeal:
    """Hermite basis of J1*J2, oriented so its signed norm is the product of the factors'.

    Raises:
        InternalError: If the product lattice has the wrong covolume (only possible
            for non-invertible factors)
    """
    if J1.disc != J2.disc:
        raise DiscriminantMismatchError(J1.disc.value, J2.disc.value, "ideal product")
    target = J1.signed_norm() * J2.signed_norm()
    key = _lattice_key(product_generators(J1, J2))
    result = _from_key(J1.disc, key, 1 if target > 0 else -1)
    if result.signed_norm() != target:
        raise InternalError(
            f"product of {J1} and {J2} has norm {result.signed_norm()}, expected {target}"
        )
    logger.debug("product %s * %s -> %s", J1, J2, result)
    return result


def express_in_basis(e: QuadElem, J: OrientedIdeal) -> Tuple[int, int]:
    """Return integers ``(m, n)`` with ``e = m*alpha + n*beta``.

    Raises:
        NotInModuleError: If ``e`` is not in the lattice spanned by the basis
    """
    m, n = _solve(e, J.alpha, J.beta)
    if m.denominator != 1 or n.denominator != 1:
        raise NotInModuleError(f"{e} is not in {J}: coordinates ({m}, {n})")
    return int(m), int(n)


@dataclass(frozen=True)
class BalancedPair:
    """A pair ``(J, delta)`` with delta invertible; balance is checked by ``validate_pair``."""

    ideal: OrientedIdeal
    delta: QuadElem

    def __post_init__(self) -> None:
        if self.delta.disc != self.ideal.disc:
            raise DiscriminantMismatchError(self.delta.disc.value, self.ideal.disc.value, "pair")
        if not self.delta:
            raise NotInvertibleError("delta must be invertible")

    @property
    def disc(self) -> Discriminant:
        return self.ideal.disc

    def cube_quotients(self) -> Tuple[QuadElem, QuadElem, QuadElem, QuadElem]:
        """``delta^-1 * alpha^(3-i) * beta^i`` for i = 0..3."""
        alpha, beta = self.ideal.basis
        inv = self.delta.inverse()
        return (
            inv * alpha * alpha * alpha,
            inv * alpha * alpha * beta,
            inv * alpha * beta * beta,
            inv * beta * beta * beta,
        )

    @classmethod
    def unit(cls, disc: Discriminant) -> "BalancedPair":
        return cls(OrientedIdeal.unit(disc), disc.one)

    def to_json(self) -> dict:
        payload = self.ideal.to_json()
        payload["delta"] = str(self.delta)
        return payload

    def __str__(self) -> str:
        return f"({self.ideal}, {self.delta})"


def validate_pair(pair: BalancedPair) -> PairValidation:
    """Check ``J^3 in delta*R_D`` and ``signed_norm(J)^3 == norm(delta)`` exactly."""
    failures: List[str] = []
    cube_ok = all(q.is_in_ring() for q in pair.cube_quotients())
    if not cube_ok:
        failures.append("cube_containment")
    n = pair.ideal.signed_norm()
    norm_ok = n**3 == pair.delta.norm()
    if not norm_ok:
        failures.append("norm_condition")
    return {
        "cube_containment": cube_ok,
        "norm_condition": norm_ok,
        "signed_norm": str(n),
        "delta_norm": str(pair.delta.norm()),
        "passed": not failures,
        "failures": failures,
    }
