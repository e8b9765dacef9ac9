"""Sparse polynomials in ``(x1, y1, x2, y2)`` with coefficients in Q(sqrt(D)).

Terms are kept as a dict from exponent quadruples ``(e1, f1, e2, f2)`` to
``QuadElem``; zero coefficients are never stored.
"""

from dataclasses import dataclass
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple, Union

from sympy import QQ, Poly, Rational

from cubic_composition.core.cubicform import parse_ints
from cubic_composition.core.errors import DiscriminantMismatchError, DomainError
from cubic_composition.core.quadring import Discriminant, QuadElem
from cubic_composition.core.symbolic import BICUBIC_GENS, bilinear_poly, to_sympy

Monomial = Tuple[int, int, int, int]
Scalar = Union[int, QuadElem]

# x1*x2, x1*y2, y1*x2, y1*y2
BILINEAR_MONOMIALS: Tuple[Monomial, ...] = ((1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1))
TRIPLICATE_WEIGHTS = (1, 3, 3, 1)


@dataclass(frozen=True)
class BilinearMap:
    """``X = m1*x1*x2 + m2*x1*y2 + m3*y1*x2 + m4*y1*y2`` and ``Y`` likewise from ``n``."""

    m: Tuple[int, int, int, int]
    n: Tuple[int, int, int, int]

    def __post_init__(self) -> None:
        for name in ("m", "n"):
            values = tuple(getattr(self, name))
            bad = any(isinstance(v, bool) or not isinstance(v, int) for v in values)
            if len(values) != 4 or bad:
                raise TypeError(f"{name} must be four ints, got {values!r}")
            object.__setattr__(self, name, values)

    def as_polys(self) -> Tuple[Poly, Poly]:
        return bilinear_poly(self.m), bilinear_poly(self.n)

    @classmethod
    def parse(cls, x_text: str, y_text: str) -> "BilinearMap":
        """Parse ``"m1,m2,m3,m4"`` and ``"n1,n2,n3,n4"``."""
        m = tuple(parse_ints(x_text, 4, "X"))
        n = tuple(parse_ints(y_text, 4, "Y"))
        return cls(m, n)  # type: ignore[arg-type]

    def __str__(self) -> str:
        return f"X={','.join(map(str, self.m))} Y={','.join(map(str, self.n))}"


class MultiPoly:
    """Polynomial in ``x1, y1, x2, y2`` over Q(sqrt(D))."""

    def __init__(self, disc: Discriminant, terms: Optional[Mapping[Monomial, Scalar]] = None):
        self.disc = disc
        self.terms: Dict[Monomial, QuadElem] = {}
        for monomial, value in (terms or {}).items():
            coeff = value if isinstance(value, QuadElem) else disc.element(value)
            if coeff.disc != disc:
                raise DiscriminantMismatchError(
                    coeff.disc.value, disc.value, "polynomial coefficient"
                )
            if coeff:
                self.terms[tuple(monomial)] = coeff  # type: ignore[index]

    @classmethod
    def constant(cls, disc: Discriminant, value: Scalar) -> "MultiPoly":
        return cls(disc, {(0, 0, 0, 0): value})

    @classmethod
    def from_bilinear(cls, disc: Discriminant, coeffs: Sequence[int]) -> "MultiPoly":
        return cls(disc, dict(zip(BILINEAR_MONOMIALS, coeffs)))

    @classmethod
    def from_tilde(
        cls, disc: Discriminant, coeffs: Sequence[QuadElem], slot: int
    ) -> "MultiPoly":
        """``k0*x^3 + 3*k1*x^2*y + 3*k2*x*y^2 + k3*y^3`` in ``(x1, y1)`` or ``(x2, y2)``."""
        terms: Dict[Monomial, QuadElem] = {}
        for i, (k, w) in enumerate(zip(coeffs, TRIPLICATE_WEIGHTS)):
            exps = (3 - i, i, 0, 0) if slot == 1 else (0, 0, 3 - i, i)
            terms[exps] = k * w
        return cls(disc, terms)

    @classmethod
    def from_tilde_at_bilinear(
        cls, disc: Discriminant, coeffs: Sequence[QuadElem], xy: BilinearMap
    ) -> "MultiPoly":
        """Expand ``sum w_i * k_i * X^(3-i) * Y^i`` with X, Y substituted from ``xy``."""
        big_x = cls.from_bilinear(disc, xy.m)
        big_y = cls.from_bilinear(disc, xy.n)
        result = cls(disc)
        for i, (k, w) in enumerate(zip(coeffs, TRIPLICATE_WEIGHTS)):
            result = result + (big_x ** (3 - i)) * (big_y**i) * (k * w)
        return result

    def _lift(self, other: object) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.disc != self.disc:
                raise DiscriminantMismatchError(other.disc.value, self.disc.value, "polynomial")
            return other
        if isinstance(other, (int, QuadElem)) and not isinstance(other, bool):
            return MultiPoly.constant(self.disc, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "MultiPoly":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for monomial, value in o.terms.items():
            terms[monomial] = terms[monomial] + value if monomial in terms else value
        return MultiPoly(self.disc, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.disc, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: object) -> "MultiPoly":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __mul__(self, other: object) -> "MultiPoly":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        terms: Dict[Monomial, QuadElem] = {}
        for e1, v1 in self.terms.items():
            for e2, v2 in o.terms.items():
                exps: Monomial = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                product = v1 * v2
                terms[exps] = terms[exps] + product if exps in terms else product
        return MultiPoly(self.disc, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise DomainError("negative powers are not polynomials")
        result = MultiPoly.constant(self.disc, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.disc == other.disc and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.disc, frozenset(self.terms.items())))

    def __iter__(self) -> Iterator[Tuple[Monomial, QuadElem]]:
        return iter(sorted(self.terms.items(), reverse=True))

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, monomial: Monomial) -> QuadElem:
        return self.terms.get(monomial, self.disc.zero)

    def is_bihomogeneous(self, degrees: Tuple[int, int] = (3, 3)) -> bool:
        return all(e1 + f1 == degrees[0] and e2 + f2 == degrees[1] for e1, f1, e2, f2 in self.terms)

    def _component_poly(self, index: int) -> Poly:
        expr = 0
        for (e1, f1, e2, f2), value in self.terms.items():
            part = value.tau_split()[index]
            if part:
                x1, y1, x2, y2 = BICUBIC_GENS
                expr += to_sympy(part) * x1**e1 * y1**f1 * x2**e2 * y2**f2
        return Poly(expr, *BICUBIC_GENS, domain=QQ)

    def rational_part(self) -> Poly:
        """Coefficients ``c`` of ``c + a*tau``, as a sympy Poly."""
        return self._component_poly(0)

    def tau_part(self) -> Poly:
        """Coefficients ``a`` of ``c + a*tau`` (twice the sqrt(D) coordinate)."""
        return self._component_poly(1)

    def tau_coefficients(self) -> Dict[Monomial, Rational]:
        """The tau-part as a plain ``{monomial: coefficient}`` map."""
        return {k: to_sympy(v.tau_split()[1]) for k, v in self.terms.items() if v.t}

    def __repr__(self) -> str:
        return f"MultiPoly(D={self.disc.value}, terms={len(self.terms)})"
