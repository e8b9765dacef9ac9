"""Tests for the correspondence between cubic forms and balanced pairs."""

from fractions import Fraction

import pytest

from cubic_composition.bijection import (
    form_to_pair,
    lemma_check,
    pair_product,
    pair_to_form,
    read_pair,
    scale_pair,
    tilde_from_pair,
)
from cubic_composition.classgroup import enumerate_forms
from cubic_composition.core import (
    BalancedPair,
    CubicForm,
    Discriminant,
    OrientedIdeal,
    signed_norm,
    validate_pair,
)
from cubic_composition.core.errors import (
    DiscriminantMismatchError,
    NotProjectiveError,
    UnbalancedPairError,
)

D5 = Discriminant(5)
D31 = Discriminant(-31)

WORKED_FORMS = [
    CubicForm(-1, -1, 1, 4),
    CubicForm(1, -2, 0, 1),
    CubicForm(7, 1, -1, 0),
    CubicForm(-1, 1, 0, 1),
    CubicForm(-3, 2, -1, 1),
    CubicForm(-8, 5, -3, 2),
]


def test_form_to_pair_d5():
    """Test the pair of (-1, 1, 0, 1), whose basis is negatively oriented."""
    pair = form_to_pair(CubicForm(-1, 1, 0, 1))
    alpha, beta = pair.ideal.basis
    assert alpha == D5.element(Fraction(-1, 2), Fraction(1, 2))
    assert beta == D5.one
    assert pair.delta == alpha
    assert signed_norm(pair.ideal) == -1


def test_form_to_pair_d31():
    """Test the pair of (-1, -1, 1, 4)."""
    pair = form_to_pair(CubicForm(-1, -1, 1, 4))
    alpha, beta = pair.ideal.basis
    assert alpha == D31.from_tau(Fraction(7, 2), -1)
    assert beta == D31.from_tau(Fraction(13, 2), 1)
    assert pair.delta == alpha * beta
    assert validate_pair(pair)["passed"]


@pytest.mark.parametrize("d,expected", [(5, (0, 1, 1, 2)), (-31, (0, 1, 1, -7)), (8, (0, 1, 0, 2))])
def test_unit_pair_gives_identity_form(d, expected):
    """Test pair_to_form on (R_D, 1) with basis (1, omega)."""
    assert pair_to_form(BalancedPair.unit(Discriminant(d))) == CubicForm(*expected)


def test_round_trip_worked_forms():
    """Test pair_to_form(form_to_pair(f)) == f on the worked examples."""
    for f in WORKED_FORMS:
        pair = form_to_pair(f)
        assert validate_pair(pair)["passed"]
        assert pair_to_form(pair) == f
        assert lemma_check(f, pair)


@pytest.mark.parametrize("d", [-31, 5, -23, 8])
def test_round_trip_enumerated(d):
    """Test the round trip and both pair conditions on every small projective form."""
    for f in enumerate_forms(d, 6):
        pair = form_to_pair(f)
        report = validate_pair(pair)
        assert report["passed"], (f, report)
        assert pair_to_form(pair) == f


def test_read_pair_parity():
    """Test that read-off coefficients satisfy 2*c_i = a_i*D mod 2."""
    for f in enumerate_forms(-31, 4):
        form, c_values = read_pair(form_to_pair(f))
        assert form == f
        for c, a in zip(c_values, form.coefficients):
            assert (2 * c - a * -31) % 2 == 0


def test_scaled_pair_gives_same_form():
    """Test that (kappa*J, kappa^3*delta) maps to the same form."""
    f = CubicForm(-1, -1, 1, 4)
    pair = form_to_pair(f)
    for kappa in (D31.omega + 2, D31.element(3), D31.from_coordinates(-1, 2)):
        scaled = scale_pair(pair, kappa)
        assert validate_pair(scaled)["passed"]
        assert pair_to_form(scaled) == f


def test_scaling_by_negative_norm_d5():
    """Test scaling by omega - 1, which has norm -1, for D = 5."""
    f = CubicForm(-3, 2, -1, 1)
    pair = form_to_pair(f)
    scaled = scale_pair(pair, D5.omega - 1)
    assert signed_norm(scaled.ideal) == -signed_norm(pair.ideal)
    assert pair_to_form(scaled) == f


def test_tilde_from_pair():
    """Test that the cube quotients are c_i + a_i*tau."""
    f = CubicForm(-1, 1, 0, 1)
    half = Fraction(1, 2)
    assert tilde_from_pair(form_to_pair(f)) == (
        D5.from_tau(3 * half, -1),
        D5.from_tau(-half, 1),
        D5.from_tau(1, 0),
        D5.from_tau(half, 1),
    )


def test_lemma_check_fails_for_other_pair():
    """Test that the cube identity fails against an unrelated pair."""
    assert not lemma_check(CubicForm(-1, 1, 0, 1), BalancedPair.unit(D5))
    assert not lemma_check(CubicForm(-1, -1, 1, 4), BalancedPair.unit(D5))


def test_non_projective_form():
    """Test that forms with imprimitive Hessian are rejected."""
    with pytest.raises(NotProjectiveError):
        form_to_pair(CubicForm(0, 2, 0, -2))


def test_expected_discriminant_mismatch():
    """Test that an explicit discriminant must match the form's."""
    with pytest.raises(DiscriminantMismatchError):
        form_to_pair(CubicForm(-1, 1, 0, 1), D31)


def test_unbalanced_pair():
    """Test that (R_D, tau) does not read off an integral form."""
    with pytest.raises(UnbalancedPairError):
        pair_to_form(BalancedPair(OrientedIdeal.unit(D5), D5.tau))


def test_pair_product_is_balanced():
    """Test that the product of two pairs is a balanced pair."""
    p1 = form_to_pair(CubicForm(-1, 1, 0, 1))
    p2 = form_to_pair(CubicForm(-3, 2, -1, 1))
    pair = pair_product(p1, p2)
    assert validate_pair(pair)["passed"]
    assert pair.delta == D5.from_coordinates(13, -8)
    assert pair_to_form(pair) == CubicForm(8, 13, 21, 34)
