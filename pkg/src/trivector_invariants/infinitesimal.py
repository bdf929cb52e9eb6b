"""Derivations induced by sp(6) on polynomials in the ``y_abc``.

A linear vector field is stored as a 20x20 matrix ``C``; its value at a
trivector with coordinates ``y`` is ``C y``, i.e. the derivation
``sum_hij (sum_abc C[hij][abc] y_abc) d/dy_hij``. Rows and columns follow
:data:`~trivector_invariants.exterior.TRIPLES`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from importlib import resources
from typing import Iterable, Sequence

from . import linalg
from .exterior import TRIPLES, Multivector, code, decode
from .invariants import bundled_term_list
from .polynomial import Polynomial
from .symplectic import (COORDINATES, NotSymplecticError, coordinate_element, is_sp_algebra,
                         random_small_rational)
from .termlist import TermList

_TRIPLE_INDEX = {t: i for i, t in enumerate(TRIPLES)}

FIELD_NAMES: tuple[str, ...] = tuple(f"Z{r}{s}" for r, s in COORDINATES)

# fixture point for the independence determinant (lambda = 1 on these, 0 elsewhere)
FIXTURE_POINT = (123, 125, 134, 456)


def _delta(i, j):
    return 1 if i == j else 0


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def ustar_coefficient(u, hij: Sequence[int], abc: Sequence[int]) -> Fraction:
    """``U^{abc}_{hij}``: minus the sum of the three determinants obtained from
    the Kronecker matrix ``[delta_{row, col}]`` by putting the ``u`` column
    ``u_{row, col}`` into each column in turn."""
    rows = tuple(hij)
    total = Fraction(0)
    for k in range(3):
        m = [[u[r - 1][abc[c] - 1] if c == k else _delta(r, abc[c]) for c in range(3)] for r in rows]
        total -= _det3(m)
    return total


def ustar(u) -> list[list[Fraction]]:
    if not is_sp_algebra(u):
        raise NotSymplecticError("ustar needs a member of sp(6)")
    return [[ustar_coefficient(u, hij, abc) for abc in TRIPLES] for hij in TRIPLES]


def z_fields() -> dict[str, list[list[Fraction]]]:
    """``Z_rs = ustar(U_rs)`` for the 21 coordinate elements, so that
    ``ustar(U) = sum u_rs Z_rs``."""
    return {name: [list(row) for row in c] for name, c in _z_fields().items()}


@lru_cache(maxsize=1)
def _z_fields():
    return {f"Z{r}{s}": tuple(map(tuple, ustar(coordinate_element(r, s)))) for r, s in COORDINATES}


def field_at(c, point: Multivector) -> list[Fraction]:
    """Coefficient vector ``C y`` of the field at ``point``."""
    return linalg.matvec(c, point.coeffs)


def field_bracket(c, d):
    """Matrix of the commutator ``[X_C, X_D]`` of two linear fields, ``DC - CD``."""
    return linalg.mat_sub(linalg.matmul(d, c), linalg.matmul(c, d))


# --- printed fields ----------------------------------------------------------------


def printed_z_fields() -> dict[str, list[list[Fraction]]]:
    """The explicit fields as typeset, parsed from ``data/z_fields.txt``."""
    text = (resources.files("trivector_invariants") / "data" / "z_fields.txt").read_text()
    out = {name: linalg.zeros(len(TRIPLES)) for name in FIELD_NAMES}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].split()
        if not line:
            continue
        name, coeff, y, big_y = line
        if name not in out:
            raise ValueError(f"z_fields.txt:{lineno}: unknown field {name}")
        col, row = _TRIPLE_INDEX[decode(y)], _TRIPLE_INDEX[decode(big_y)]
        out[name][row][col] += int(coeff)
    return out


@dataclass
class FieldDiscrepancy:
    field: str
    y: int
    big_y: int
    printed: Fraction
    computed: Fraction


def z_field_discrepancies() -> list[FieldDiscrepancy]:
    printed, computed = printed_z_fields(), z_fields()
    out = []
    for name in FIELD_NAMES:
        for r, hij in enumerate(TRIPLES):
            for c, abc in enumerate(TRIPLES):
                p, q = printed[name][r][c], computed[name][r][c]
                if p != q:
                    out.append(FieldDiscrepancy(name, code(abc), code(hij), p, q))
    return out


# --- gradients and checks ------------------------------------------------------------


def _as_polynomial(poly) -> Polynomial:
    if isinstance(poly, TermList):
        return poly.polynomial()
    if isinstance(poly, Polynomial):
        return poly
    raise TypeError(f"expected a TermList or Polynomial, got {type(poly).__name__}")


def grad(poly, point: Multivector) -> list[Fraction]:
    return _as_polynomial(poly).gradient(point)


def random_points(seed: int, count: int, bound: int = 9) -> list[Multivector]:
    rng = random.Random(seed)
    return [Multivector(3, [random_small_rational(rng, bound) for _ in TRIPLES]) for _ in range(count)]


@dataclass
class InfinitesimalReport:
    checked: int = 0
    failures: list[tuple[str, int, Fraction]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def infinitesimal_check(poly, points: Iterable[Multivector],
                        fields: dict[str, list[list[Fraction]]] | None = None) -> InfinitesimalReport:
    """Pair ``grad I`` with every field at every point; all pairings must vanish."""
    p = _as_polynomial(poly)
    fields = _z_fields() if fields is None else fields
    report = InfinitesimalReport()
    for k, pt in enumerate(points):
        g = p.gradient(pt)
        for name, c in fields.items():
            value = sum((gi * wi for gi, wi in zip(g, field_at(c, pt))), Fraction(0))
            report.checked += 1
            if value:
                report.failures.append((name, k, value))
    return report


def field_matrix(point: Multivector, fields=None) -> list[list[Fraction]]:
    fields = _z_fields() if fields is None else fields
    return [field_at(c, point) for c in fields.values()]


def generic_rank(points: Iterable[Multivector]) -> int:
    """Maximum exact rank of the 21x20 field matrix over the sample."""
    fields = _z_fields()
    best = None
    for pt in points:
        r = linalg.rank(field_matrix(pt, fields))
        best = r if best is None else max(best, r)
    if best is None:
        raise ValueError("generic_rank needs at least one point")
    return best


def fixture_point() -> Multivector:
    return Multivector.from_dict(3, {decode(c): Fraction(1) for c in FIXTURE_POINT})


def independence_determinant(point: Multivector) -> Fraction:
    """``det [[dI1(Y123), dI1(Y126)], [dI2(Y123), dI2(Y126)]]`` from the term lists."""
    i123, i126 = _TRIPLE_INDEX[(1, 2, 3)], _TRIPLE_INDEX[(1, 2, 6)]
    g1 = grad(bundled_term_list("i1"), point)
    g2 = grad(bundled_term_list("i2"), point)
    return g1[i123] * g2[i126] - g1[i126] * g2[i123]


def independence_fixture() -> Fraction:
    return independence_determinant(fixture_point())
