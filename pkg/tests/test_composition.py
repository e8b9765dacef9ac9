"""Tests for composition of cubic forms and its symbolic checks."""

from fractions import Fraction

import pytest

from cubic_composition.classgroup import equivalent, identity_form
from cubic_composition.composition import (
    BilinearMap,
    MultiPoly,
    compose,
    covariant_identity_check,
    covariant_rhs,
    defining_rhs,
    tau_expansion,
    tilde,
    tilde_identity_check,
    tilde_product,
    verification_report,
    verify_composition,
)
from cubic_composition.core import CubicForm, Discriminant
from cubic_composition.core.errors import (
    DiscriminantMismatchError,
    DomainError,
    NotProjectiveError,
    ParseError,
)

D5 = Discriminant(5)
D31 = Discriminant(-31)

F1_31, F2_31 = CubicForm(-1, -1, 1, 4), CubicForm(1, -2, 0, 1)
F1_5, F2_5 = CubicForm(-1, 1, 0, 1), CubicForm(-3, 2, -1, 1)

# Published compositions of the pairs above.
P_31, XY_31 = CubicForm(7, 1, -1, 0), BilinearMap((1, 0, 1, -1), (0, 2, 4, 1))
P_5, XY_5 = CubicForm(-8, 5, -3, 2), BilinearMap((1, 0, 0, 1), (0, 1, 1, 1))


def test_tilde_coefficients():
    """Test the coefficients c_i + a_i*tau of p~."""
    half = Fraction(1, 2)
    assert tilde(F1_5) == (
        D5.from_tau(3 * half, -1),
        D5.from_tau(-half, 1),
        D5.one,
        D5.from_tau(half, 1),
    )


def test_tilde_product_tau_part_d31():
    """Test selected tau-part coefficients of p1~ * p2~ for D = -31."""
    product = tilde_product(F1_31, F2_31)
    assert product.is_bihomogeneous((3, 3))
    coefficients = product.tau_coefficients()
    assert coefficients[(3, 0, 3, 0)] == 7
    assert coefficients[(2, 1, 2, 1)] == -54
    assert coefficients[(0, 3, 0, 3)] == -1


def test_tilde_product_tau_part_d5():
    """Test selected tau-part coefficients of p1~ * p2~ for D = 5."""
    coefficients = tilde_product(F1_5, F2_5).tau_coefficients()
    assert coefficients[(3, 0, 3, 0)] == -8
    assert coefficients[(3, 0, 0, 3)] == 2
    assert coefficients[(2, 1, 2, 1)] == -27
    assert coefficients[(0, 3, 1, 2)] == 3


def test_tilde_product_parts_match_rhs():
    """Test tau-part == p1'p2 + p1p2' and rational part == p1'p2' + p1p2*D/4."""
    for f1, f2 in ((F1_31, F2_31), (F1_5, F2_5), (F2_5, F2_5)):
        product = tilde_product(f1, f2)
        assert (product.tau_part() - defining_rhs(f1, f2)).is_zero
        assert (product.rational_part() - covariant_rhs(f1, f2)).is_zero


def test_tau_expansion():
    """Test the ordered coefficient list of p1'p2 + p1p2'."""
    expansion = dict(tau_expansion(F1_31, F2_31))
    assert len(expansion) == 16
    assert expansion[(3, 0, 3, 0)] == 7
    assert expansion[(2, 1, 2, 1)] == -54
    assert expansion[(0, 3, 0, 3)] == -1
    assert tau_expansion(F1_5, F2_5)[0] == ((3, 0, 3, 0), -8)


@pytest.mark.parametrize(
    "f1,f2,expected",
    [
        (F1_31, F2_31, [7, 6, -12, 0, 33, -54, -36, 12, -3, -126, 36, 18, -29, -18, 48, -1]),
        (F1_5, F2_5, [-8, 15, -9, 2, 15, -27, 18, -3, -9, 18, -9, 3, 2, -3, 3, 0]),
    ],
)
def test_tau_expansion_full(f1, f2, expected):
    """Test all 16 coefficients of p1'p2 + p1p2' in order."""
    assert [c for _, c in tau_expansion(f1, f2)] == expected


def test_published_witnesses_verify():
    """Test the defining identity on the published compositions."""
    assert verify_composition(F1_31, F2_31, P_31, XY_31)
    assert verify_composition(F1_5, F2_5, P_5, XY_5)


def test_perturbed_witness_fails():
    """Test that changing one coefficient of X breaks the identity."""
    broken = BilinearMap((1, 0, 0, 2), XY_5.n)
    assert not verify_composition(F1_5, F2_5, P_5, broken)
    assert not verify_composition(F1_5, F2_5, CubicForm(-8, 5, -3, 3), XY_5)


def test_verify_rejects_mixed_discriminants():
    """Test that forms of different discriminants never verify."""
    assert not verify_composition(F1_31, F2_5, P_5, XY_5)
    assert not covariant_identity_check(F1_31, F2_5, P_5, XY_5)
    assert not tilde_identity_check(F1_31, F2_5, P_5, XY_5)


def test_compose_d31():
    """Test compose on the D = -31 example."""
    result = compose(F1_31, F2_31)
    assert result.verified
    assert result.P == CubicForm(-7, -6, -4, -1)
    assert result.xy == BilinearMap((-2, 2, 2, 3), (1, -2, -3, -2))
    assert result.P.discriminant() == -31
    assert result.P.is_projective()
    assert equivalent(result.P, P_31)


def test_compose_d5():
    """Test compose on the D = 5 example."""
    result = compose(F1_5, F2_5)
    assert result.verified
    assert result.P == CubicForm(8, 13, 21, 34)
    assert result.xy == BilinearMap((5, -3, -3, 2), (-3, 2, 2, -1))
    assert equivalent(result.P, P_5)
    assert equivalent(result.P, identity_form(5))


def test_compose_passes_all_identities():
    """Test that every check in the report holds for computed compositions."""
    for f1, f2 in ((F1_31, F2_31), (F1_31, F1_31), (F2_5, F1_5), (F1_5, F1_5)):
        result = compose(f1, f2)
        report = verification_report(f1, f2, result.P, result.xy)
        assert report == {
            "defining_identity": True,
            "covariant_identity": True,
            "tilde_identity": True,
            "passed": True,
        }
        assert result.verification == report


def test_compose_with_identity():
    """Test that composing with the identity form preserves the class."""
    for f in (F1_31, F2_31):
        result = compose(f, identity_form(-31))
        assert equivalent(result.P, f)


def test_compose_mismatched_discriminants():
    """Test that composition needs a common discriminant."""
    with pytest.raises(DiscriminantMismatchError):
        compose(F1_31, F1_5)


def test_compose_non_projective():
    """Test that composition needs projective forms."""
    with pytest.raises(NotProjectiveError):
        compose(CubicForm(0, 2, 0, -2), CubicForm(0, 2, 0, -2))


def test_composition_json():
    """Test the JSON shape of a composition."""
    payload = compose(F1_5, F2_5).to_json()
    assert payload == {
        "P": {"a": [8, 13, 21, 34]},
        "X": [5, -3, -3, 2],
        "Y": [-3, 2, 2, -1],
        "verified": True,
    }


def test_bilinear_map_parse():
    """Test parsing and validation of bilinear maps."""
    assert BilinearMap.parse("1,0,1,-1", "0,2,4,1") == XY_31
    assert str(XY_31) == "X=1,0,1,-1 Y=0,2,4,1"
    with pytest.raises(ParseError):
        BilinearMap.parse("1,0,1", "0,2,4,1")
    with pytest.raises(TypeError):
        BilinearMap((1, 0, 1), (0, 2, 4, 1))


def test_multipoly_arithmetic():
    """Test that MultiPoly drops zero terms and multiplies exactly."""
    x = MultiPoly.from_bilinear(D5, (1, 0, 0, 0))
    assert len(x - x) == 0
    assert x * x == x**2
    assert (x + 1).coefficient((0, 0, 0, 0)) == D5.one
    assert x.is_bihomogeneous((1, 1))
    assert not (x + 1).is_bihomogeneous((1, 1))


def test_multipoly_discriminant_mismatch():
    """Test that polynomials over different fields do not combine."""
    x5 = MultiPoly.from_bilinear(D5, (1, 0, 0, 0))
    x31 = MultiPoly.from_bilinear(D31, (1, 0, 0, 0))
    with pytest.raises(DiscriminantMismatchError):
        x5 + x31
    with pytest.raises(DiscriminantMismatchError):
        MultiPoly(D5, {(0, 0, 0, 0): D31.tau})
    with pytest.raises(DomainError):
        x5 ** -1
