from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from trivector_invariants.exterior import BASIS, TRIPLES, Multivector
from trivector_invariants.symplectic import sp_basis

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))
rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 1000)


def forms(grade: int):
    return st.lists(small_rationals, min_size=len(BASIS[grade]), max_size=len(BASIS[grade])).map(
        lambda cs: Multivector(grade, cs))


trivectors = forms(3)
vectors = st.lists(small_rationals, min_size=6, max_size=6)


@st.composite
def symplectic_matrices(draw, max_factors: int = 4):
    from trivector_invariants import linalg
    from trivector_invariants.symplectic import shear

    basis = sp_basis()
    a = linalg.identity(6)
    for _ in range(draw(st.integers(0, max_factors))):
        u = basis[draw(st.integers(0, 20))]
        t = draw(small_rationals.filter(bool))
        a = linalg.matmul(a, shear(u, t))
    return a


@pytest.fixture(scope="session")
def triples():
    return TRIPLES


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
