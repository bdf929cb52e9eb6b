import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from trivector_invariants import linalg
from trivector_invariants.exterior import (BASIS, TRIPLES, GradeError, Multivector, code, contract,
                                           decode, evaluate, permutation_sign, pullback,
                                           pullback_by_inverse, top_coefficient, trivector, wedge)
from trivector_invariants.symplectic import OMEGA

from conftest import forms, small_rationals, symplectic_matrices, trivectors, vectors

v = Multivector.basis_form


def _sympy_inverse(a):
    inv = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in a]).inv()
    return [[Fraction(int(x.p), int(x.q)) for x in inv.row(i)] for i in range(inv.rows)]


def invertible():
    return st.lists(st.lists(small_rationals, min_size=6, max_size=6), min_size=6, max_size=6).filter(
        lambda m: linalg.det(m) != 0)


# -- basis and indexing -------------------------------------------------------------


def test_basis_sizes_and_order():
    assert [len(BASIS[r]) for r in range(7)] == [1, 6, 15, 20, 15, 6, 1]
    assert TRIPLES[0] == (1, 2, 3) and TRIPLES[-1] == (4, 5, 6)
    assert list(TRIPLES) == sorted(TRIPLES)
    assert len({code(t) for t in TRIPLES}) == 20


def test_code_round_trip():
    for t in TRIPLES:
        assert decode(code(t)) == t
    with pytest.raises(ValueError):
        decode("132")
    with pytest.raises(ValueError):
        decode("127")


def test_unsorted_access_uses_sign():
    theta = trivector({(1, 2, 3): 5})
    assert theta[(2, 1, 3)] == -5
    assert theta[(3, 1, 2)] == 5
    assert theta[(1, 1, 4)] == 0
    assert theta[(1, 2, 4)] == 0
    with pytest.raises(GradeError):
        theta[(1, 2)]


def test_permutation_sign():
    assert permutation_sign((1, 2, 3)) == 1
    assert permutation_sign((2, 1, 3)) == -1
    assert permutation_sign((1, 1, 2)) == 0


def test_from_dict_signs_unsorted_keys():
    assert Multivector.from_dict(3, {(2, 1, 3): 1}) == trivector({(1, 2, 3): -1})


# -- wedge ----------------------------------------------------------------------------


def test_wedge_examples():
    assert wedge(v(1), v(1)).is_zero()
    assert wedge(v(2), v(1)) == -wedge(v(1), v(2))
    cube = OMEGA ^ OMEGA ^ OMEGA
    assert top_coefficient(cube) == -6


def test_omega_cubed_brute_force():
    # expand the cube term by term, counting signs explicitly
    pairs = [(i, i + 3) for i in (1, 2, 3)]
    total = 0
    for p, q, r in itertools.product(pairs, repeat=3):
        seq = p + q + r
        total += permutation_sign(seq)
    assert total == -6


def test_wedge_grade_overflow():
    with pytest.raises(GradeError):
        wedge(trivector({(1, 2, 3): 1}), Multivector.basis_form(1, 2, 3, 4))


@given(forms(1), forms(2), forms(2))
def test_wedge_associative(a, b, c):
    assert (a ^ b) ^ c == a ^ (b ^ c)


@given(forms(2), trivectors)
def test_graded_commutativity(a, b):
    assert a ^ b == b ^ a  # (-1)^{2*3} = 1


@given(forms(1), trivectors)
def test_graded_anticommutativity(a, b):
    assert a ^ b == -(b ^ a)


# -- contraction and evaluation -------------------------------------------------------


def test_contract_examples():
    e = lambda i: [Fraction(int(k == i)) for k in range(1, 7)]  # noqa: E731
    assert contract(e(1), v(1, 4)) == v(4)
    assert contract(e(4), OMEGA) == -v(1)
    assert contract(e(1), v(2, 3)).is_zero()
    with pytest.raises(GradeError):
        contract(e(1), Multivector(0, [1]))


@given(vectors, forms(2), trivectors)
def test_contract_anti_derivation(x, a, b):
    lhs = contract(x, a ^ b)
    rhs = (contract(x, a) ^ b) + (a ^ contract(x, b))
    assert lhs == rhs


@given(vectors, forms(2))
def test_contract_twice_vanishes(x, a):
    assert contract(x, contract(x, a)).is_zero()


@given(trivectors, vectors, vectors, vectors)
def test_evaluate_is_iterated_contraction(theta, x, y, z):
    scalar = contract(z, contract(y, contract(x, theta)))
    assert evaluate(theta, [x, y, z]) == scalar.coeffs[0]


def test_evaluate_determinant_convention():
    e1, e2 = [1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]
    assert evaluate(v(1, 2), [e1, e2]) == 1
    assert evaluate(v(1, 2), [e2, e1]) == -1


# -- pullback -------------------------------------------------------------------------


def _brute_pullback(a, theta):
    """Full tensor sum over all index triples with the sympy inverse."""
    b = _sympy_inverse(a)
    out = {}
    for t in TRIPLES:
        s = Fraction(0)
        for i, j, k in itertools.permutations(range(1, 7), 3):
            s += theta[(i, j, k)] * b[i - 1][t[0] - 1] * b[j - 1][t[1] - 1] * b[k - 1][t[2] - 1]
        out[t] = s
    return trivector(out)


def _minor_pullback(a, theta):
    b = _sympy_inverse(a)
    out = {}
    for abc in TRIPLES:
        s = Fraction(0)
        for ijk in TRIPLES:
            minor = [[b[r - 1][c - 1] for c in abc] for r in ijk]
            s += theta[ijk] * linalg.det(minor)
        out[abc] = s
    return trivector(out)


def test_pullback_examples():
    theta = trivector(y123=1, y456=2, y135=Fraction(-1, 3))
    assert pullback(linalg.identity(6), theta) == theta
    two = linalg.mat_scale(2, linalg.identity(6))
    assert pullback(two, theta) == theta * Fraction(1, 8)


@given(invertible(), trivectors)
def test_pullback_matches_brute_force(a, theta):
    assert pullback(a, theta) == _brute_pullback(a, theta)


@given(invertible(), trivectors)
def test_pullback_matches_minor_formula(a, theta):
    assert pullback(a, theta) == _minor_pullback(a, theta)


@given(invertible(), invertible(), trivectors)
def test_pullback_is_left_action(a, b, theta):
    assert pullback(a, pullback(b, theta)) == pullback(linalg.matmul(a, b), theta)


@given(invertible(), forms(1), forms(2))
def test_pullback_respects_wedge(a, x, y):
    assert pullback(a, x ^ y) == pullback(a, x) ^ pullback(a, y)


@given(invertible(), trivectors)
def test_pullback_by_inverse(a, theta):
    assert pullback_by_inverse(linalg.inverse(a), theta) == pullback(a, theta)


def test_pullback_singular():
    with pytest.raises(linalg.SingularMatrixError):
        pullback(linalg.zeros(6), trivector(y123=1))


@given(symplectic_matrices())
def test_symplectic_preserves_omega(a):
    assert pullback(a, OMEGA) == OMEGA
