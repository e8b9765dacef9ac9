"""Tests for oriented ideals and balanced pairs."""

import itertools

import pytest

from cubic_composition.bijection import form_to_pair
from cubic_composition.classgroup import enumerate_forms
from cubic_composition.core import (
    BalancedPair,
    CubicForm,
    Discriminant,
    OrientedIdeal,
    express_in_basis,
    hnf,
    product,
    same_module,
    signed_norm,
    validate_pair,
)
from cubic_composition.core.errors import (
    DegenerateBasisError,
    NotAnIdealError,
    NotInModuleError,
    NotInvertibleError,
)

D5 = Discriminant(5)
D31 = Discriminant(-31)


def test_unit_ideal():
    """Test that R_D with basis (1, omega) has signed norm 1."""
    for disc in (D5, D31, Discriminant(8)):
        J = OrientedIdeal.unit(disc)
        assert signed_norm(J) == 1
        assert J.index() == 1
        assert validate_pair(BalancedPair.unit(disc))["passed"]


def test_reversed_unit_basis():
    """Test that swapping the basis flips the sign but not the module."""
    J = OrientedIdeal(D5.omega, D5.one)
    assert signed_norm(J) == -1
    assert same_module(J, OrientedIdeal.unit(D5))
    assert signed_norm(hnf(J)) == -1


def test_negative_basis_d5():
    """Test the basis (omega - 1, 1) of R_D for D = 5."""
    J = OrientedIdeal(D5.omega - 1, D5.one)
    assert signed_norm(J) == -1
    assert same_module(J, OrientedIdeal.unit(D5))


def test_prime_above_two():
    """Test the ideal (2, omega) for D = -31."""
    J = OrientedIdeal(D31.element(2), D31.omega)
    assert signed_norm(J) == 2
    assert J.index() == 2
    assert J.is_integral()


def test_not_an_ideal():
    """Test that (2, omega) is not an ideal for D = 5."""
    with pytest.raises(NotAnIdealError):
        OrientedIdeal(D5.element(2), D5.omega)


def test_degenerate_basis():
    """Test that a dependent basis is rejected."""
    with pytest.raises(DegenerateBasisError):
        OrientedIdeal(D5.one, D5.element(2))


def test_product_of_primes_above_two():
    """Test (2, omega)^2 == (4, omega) for D = -31."""
    J = OrientedIdeal(D31.element(2), D31.omega)
    square = product(J, J)
    assert square.basis == (D31.element(4), D31.omega)
    assert signed_norm(square) == 4


def test_express_in_basis():
    """Test integer coordinates in a module basis."""
    J = OrientedIdeal(D31.element(4), D31.omega)
    assert express_in_basis(D31.omega - 8, J) == (-2, 1)
    alpha, beta = J.basis
    assert express_in_basis(alpha * 3 + beta * 2, J) == (3, 2)
    assert express_in_basis(D31.zero, J) == (0, 0)


def test_express_outside_module():
    """Test that elements outside the lattice are reported."""
    J = OrientedIdeal(D31.element(2), D31.omega)
    with pytest.raises(NotInModuleError):
        express_in_basis(D31.one, J)


def test_hnf_idempotent():
    """Test that the Hermite basis is a fixed point and keeps the orientation."""
    for f in enumerate_forms(-31, 4):
        J = form_to_pair(f).ideal
        H = hnf(J)
        assert hnf(H) == H
        assert signed_norm(H) == signed_norm(J)
        assert same_module(H, J)


def test_index_matches_signed_norm():
    """Test |signed_norm(J)| == index(J) for integral ideals from forms."""
    for f in enumerate_forms(5, 3):
        J = form_to_pair(f).ideal
        assert J.is_integral()
        assert abs(signed_norm(J)) == J.index()


def test_product_properties():
    """Test commutativity, associativity and sign multiplicativity of products."""
    ideals = [form_to_pair(f).ideal for f in enumerate_forms(-31, 3)][:6]
    for J1, J2 in itertools.product(ideals, repeat=2):
        P12, P21 = product(J1, J2), product(J2, J1)
        assert same_module(P12, P21)
        assert signed_norm(P12) == signed_norm(J1) * signed_norm(J2)
    for J1, J2, J3 in itertools.islice(itertools.product(ideals, repeat=3), 40):
        left = product(product(J1, J2), J3)
        right = product(J1, product(J2, J3))
        assert same_module(left, right)
        assert signed_norm(left) == signed_norm(right)


def test_validate_pair_from_form():
    """Test that pairs built from forms are balanced, with either orientation."""
    pair = form_to_pair(CubicForm(-1, 1, 0, 1))
    report = validate_pair(pair)
    assert report["passed"]
    assert report["signed_norm"] == "-1"
    assert report["failures"] == []


def test_validate_unbalanced_pair():
    """Test that (R_D, tau) fails the norm condition."""
    pair = BalancedPair(OrientedIdeal.unit(D5), D5.tau)
    report = validate_pair(pair)
    assert not report["norm_condition"]
    assert not report["passed"]
    assert "norm_condition" in report["failures"]


def test_zero_delta():
    """Test that delta must be invertible."""
    with pytest.raises(ZeroDivisionError):
        BalancedPair(OrientedIdeal.unit(D5), D5.zero)
    with pytest.raises(NotInvertibleError):
        BalancedPair(OrientedIdeal.unit(D5), D5.zero)
