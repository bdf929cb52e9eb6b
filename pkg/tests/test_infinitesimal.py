from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trivector_invariants import linalg
from trivector_invariants.exterior import Multivector, TRIPLES
from trivector_invariants.infinitesimal import (FIELD_NAMES, field_at, field_bracket, field_matrix,
                                                fixture_point, generic_rank, grad,
                                                independence_determinant, independence_fixture,
                                                infinitesimal_check, printed_z_fields, random_points,
                                                ustar, z_field_discrepancies, z_fields)
from trivector_invariants.invariants import bundled_term_list
from trivector_invariants.polynomial import Polynomial
from trivector_invariants.symplectic import (COORDINATES, NotSymplecticError, act, coordinate_element,
                                             sp_basis, sp_coordinates, sp_from_coordinates)

from conftest import small_rationals, trivectors

IDX = {t: i for i, t in enumerate(TRIPLES)}

sp_elements = st.lists(small_rationals, min_size=21, max_size=21).map(sp_from_coordinates)


def test_ustar_zero():
    assert linalg.is_zero_matrix(ustar(linalg.zeros(6)))


def test_ustar_rejects_non_members():
    with pytest.raises(NotSymplecticError):
        ustar(linalg.identity(6))


def test_z41_printed_terms():
    z41 = z_fields()["Z41"]
    nonzero = {(r, c): z41[r][c] for r in range(20) for c in range(20) if z41[r][c]}
    assert len(nonzero) == 6
    # -y123 Y234: coefficient of y123 in the Y234 component
    assert z41[IDX[(2, 3, 4)]][IDX[(1, 2, 3)]] == -1
    assert z41[IDX[(2, 4, 5)]][IDX[(1, 2, 5)]] == 1


def test_printed_fields_match_derivation():
    assert z_field_discrepancies() == []
    assert printed_z_fields() == z_fields()


def test_field_count_and_copy():
    fields = z_fields()
    assert list(fields) == list(FIELD_NAMES) and len(fields) == 21
    fields["Z11"][0][0] = Fraction(99)
    assert z_fields()["Z11"][0][0] != 99


@given(sp_elements, sp_elements)
def test_ustar_linear(u, v):
    assert ustar(linalg.mat_add(u, v)) == linalg.mat_add(ustar(u), ustar(v))


@given(sp_elements)
def test_decomposition_into_z_fields(u):
    fields = z_fields()
    total = linalg.zeros(20)
    for (r, s), c in zip(COORDINATES, sp_coordinates(u)):
        total = linalg.mat_add(total, linalg.mat_scale(c, fields[f"Z{r}{s}"]))
    assert total == ustar(u)


@given(st.integers(0, 20), trivectors)
def test_ustar_is_flow_derivative(k, theta):
    # For square-zero U, t -> act(I + t U^T, theta) is a cubic in t, so the
    # five-point stencil recovers its derivative at 0 exactly.
    u = sp_basis()[k]
    ut = linalg.transpose(u)

    def p(t):
        return act(linalg.mat_add(linalg.identity(6), linalg.mat_scale(t, ut)), theta).coeffs

    deriv = [(8 * (a - b) - (c - d)) / 12 for a, b, c, d in zip(p(1), p(-1), p(2), p(-2))]
    assert deriv == field_at(ustar(u), theta)


@given(st.integers(0, 20), st.integers(0, 20))
def test_bracket_is_homomorphism(i, j):
    # sign fixed by direct evaluation: [X_U, X_V] corresponds to [U, V]
    u, v = sp_basis()[i], sp_basis()[j]
    comm = linalg.mat_sub(linalg.matmul(u, v), linalg.matmul(v, u))
    assert field_bracket(ustar(u), ustar(v)) == ustar(comm)


def test_grad_examples():
    assert grad(Polynomial(), fixture_point()) == [0] * 20
    p = Polynomial({(135, 234, 256, 256): 1})
    point = Multivector.from_dict(3, {(1, 3, 5): 1, (2, 3, 4): 1, (2, 5, 6): 3})
    assert grad(p, point)[IDX[(2, 5, 6)]] == 6
    with pytest.raises(TypeError):
        grad("y123", point)


def test_invariants_annihilated():
    points = random_points(11, 6)
    for name in ("i1", "i2"):
        report = infinitesimal_check(bundled_term_list(name), points)
        assert report.ok and report.checked == 6 * 21


def test_non_invariant_detected():
    report = infinitesimal_check(Polynomial.variable(123), random_points(2, 1))
    assert not report.ok


def test_uncorrected_i2_is_not_invariant():
    p = bundled_term_list("i2").polynomial(corrected=False)
    assert not infinitesimal_check(p, random_points(4, 2)).ok


def test_rank():
    assert generic_rank([Multivector(3)]) == 0
    assert generic_rank(random_points(1, 3)) == 18
    with pytest.raises(ValueError):
        generic_rank([])


def test_rank_at_most_eighteen():
    for pt in random_points(5, 10):
        assert linalg.rank(field_matrix(pt)) <= 18


def test_independence():
    assert independence_fixture() == 144
    assert independence_determinant(Multivector(3)) == 0
    point = fixture_point()
    for name in ("i1", "i2"):
        assert infinitesimal_check(bundled_term_list(name), [point]).ok


def test_random_points_deterministic():
    assert random_points(3, 4) == random_points(3, 4)
    assert random_points(3, 4) != random_points(4, 4)


def test_coordinate_element_field_is_z():
    assert ustar(coordinate_element(4, 1)) == z_fields()["Z41"]
