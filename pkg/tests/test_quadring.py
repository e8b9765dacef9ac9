"""Tests for exact arithmetic in Q(sqrt(D))."""

import random
from fractions import Fraction

import pytest

from cubic_composition.core import Discriminant, QuadElem, inv, is_in_ring, norm, orientation
from cubic_composition.core.errors import (
    DiscriminantMismatchError,
    InvalidDiscriminantError,
    ParseError,
)

D5 = Discriminant(5)
D8 = Discriminant(8)
D31 = Discriminant(-31)


def _random_element(rng: random.Random, disc: Discriminant) -> QuadElem:
    return disc.element(
        Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
        Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
    )


def _random_ring_element(rng: random.Random, disc: Discriminant) -> QuadElem:
    return disc.from_coordinates(rng.randint(-20, 20), rng.randint(-20, 20))


@pytest.mark.parametrize(
    "value,condition",
    [(0, "zero"), (4, "square"), (9, "square"), (2, "residue"), (-1, "residue"), (7, "residue")],
)
def test_invalid_discriminants(value, condition):
    """Test that each violated condition is reported."""
    with pytest.raises(InvalidDiscriminantError) as excinfo:
        Discriminant(value)
    assert excinfo.value.condition == condition


def test_valid_discriminants():
    """Test accepted discriminants and their parity."""
    assert Discriminant(-4).value == -4
    assert Discriminant(5).is_odd
    assert not Discriminant(8).is_odd
    assert Discriminant(-31).is_odd


def test_tau_squared():
    """Test tau^2 == D/4."""
    for disc in (D5, D8, D31):
        assert disc.tau**2 == disc.element(Fraction(disc.value, 4))


def test_multiplicative_identity():
    """Test multiplication by one."""
    e = D5.element(Fraction(-1, 2), Fraction(1, 2))
    assert e * 1 == e
    assert e * D5.one == e


def test_inverse():
    """Test the inverse of omega - 1 for D = 5."""
    e = D5.element(Fraction(-1, 2), Fraction(1, 2))
    assert inv(e) == D5.element(Fraction(1, 2), Fraction(1, 2))
    assert e * inv(e) == D5.one


def test_inverse_of_zero():
    """Test that zero has no inverse."""
    with pytest.raises(ZeroDivisionError):
        D5.zero.inverse()


def test_norm_values():
    """Test norms of small elements."""
    assert norm(D5.element(Fraction(-1, 2), Fraction(1, 2))) == -1
    assert norm(D5.one) == 1
    for disc in (D5, D8, D31):
        assert norm(disc.tau) == Fraction(-disc.value, 4)


def test_conjugate():
    """Test conjugation and the norm as e * conj(e)."""
    e = D31.element(3, Fraction(1, 2))
    assert e.conj() == D31.element(3, Fraction(-1, 2))
    assert e * e.conj() == D31.element(e.norm())


def test_is_in_ring():
    """Test membership in R_D."""
    assert is_in_ring(D5.element(Fraction(-1, 2), Fraction(1, 2)))
    assert not is_in_ring(D5.element(Fraction(1, 2), 0))
    assert is_in_ring(D8.element(3, Fraction(1, 2)))
    assert not is_in_ring(D8.element(Fraction(1, 2), Fraction(1, 2)))


def test_orientation_of_unit_basis():
    """Test orientation(1, omega) == 1 for both parities."""
    for disc in (D5, D8, D31):
        assert orientation(disc.one, disc.omega) == 1


def test_orientation_d5_example():
    """Test orientation(omega - 1, 1) == -1 for D = 5."""
    assert orientation(D5.omega - 1, D5.one) == -1


def test_coordinates():
    """Test coordinates over (1, omega)."""
    assert (D5.omega - 1).coordinates() == (-1, 1)
    assert D31.from_coordinates(4, -1).coordinates() == (4, -1)
    assert D8.tau.coordinates() == (0, 1)


def test_mismatched_discriminants():
    """Test that elements over different D cannot be combined."""
    with pytest.raises(DiscriminantMismatchError):
        D5.one + D8.one
    with pytest.raises(DiscriminantMismatchError):
        orientation(D5.one, D8.omega)


def test_str_and_parse():
    """Test rendering and parsing of field elements."""
    e = D5.element(Fraction(-1, 2), Fraction(1, 2))
    assert str(e) == "-1/2+1/2*sqrt(5)"
    assert QuadElem.parse(str(e), D5) == e
    assert QuadElem.parse("3", D5) == D5.element(3)
    assert QuadElem.parse("-1/2*sqrt(5)", D5) == D5.element(0, Fraction(-1, 2))
    assert QuadElem.parse("7/2-1/2*sqrt(-31)", D31) == D31.element(Fraction(7, 2), Fraction(-1, 2))


def test_parse_errors():
    """Test malformed element text."""
    with pytest.raises(ParseError):
        QuadElem.parse("x", D5)
    with pytest.raises(ParseError):
        QuadElem.parse("1+1*sqrt(7)", D5)


def test_norm_multiplicative():
    """Test norm(a*b) == norm(a)*norm(b) on random elements."""
    rng = random.Random(1)
    for _ in range(1000):
        disc = rng.choice((D5, D8, D31))
        a, b = _random_element(rng, disc), _random_element(rng, disc)
        assert norm(a * b) == norm(a) * norm(b)
        if a:
            assert norm(a) != 0


def test_ring_closed_under_operations():
    """Test that R_D is closed under addition and multiplication."""
    rng = random.Random(2)
    for _ in range(500):
        disc = rng.choice((D5, D8, D31))
        a, b = _random_ring_element(rng, disc), _random_ring_element(rng, disc)
        assert is_in_ring(a) and is_in_ring(b)
        assert is_in_ring(a + b)
        assert is_in_ring(a * b)


def test_orientation_scaling():
    """Test orientation(e*a, e*b) == norm(e) * orientation(a, b)."""
    rng = random.Random(3)
    for _ in range(500):
        disc = rng.choice((D5, D8, D31))
        e, a, b = (_random_element(rng, disc) for _ in range(3))
        assert orientation(e * a, e * b) == norm(e) * orientation(a, b)
        assert orientation(a, b) == -orientation(b, a)


def test_power_and_division():
    """Test integer powers and division."""
    w = D31.omega
    assert w**3 == w * w * w
    assert w**-2 * w**2 == D31.one
    assert (w / w) == D31.one
    assert 1 / w == w.inverse()
