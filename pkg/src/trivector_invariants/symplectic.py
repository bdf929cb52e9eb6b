"""The standard symplectic form, its Lie algebra and group elements.

Matrices act on column vectors: ``U v_j = sum_i U[i][j] v_i``, so ``U[i-1][j-1]``
is the entry written ``u_ij``.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import linalg
from .exterior import DIM, Multivector, pullback, wedge

OMEGA = Multivector.from_dict(2, {(i, i + 3): Fraction(1) for i in (1, 2, 3)})

# Gram matrix: GRAM[i][j] = Omega(v_{i+1}, v_{j+1})
GRAM = [[OMEGA[(i, j)] if i != j else Fraction(0) for j in range(1, DIM + 1)]
        for i in range(1, DIM + 1)]


class NotSymplecticError(ValueError):
    """A matrix fails the symplectic (group or algebra) membership test."""


def omega_cubed() -> Multivector:
    return wedge(wedge(OMEGA, OMEGA), OMEGA)


def _unit(i: int, j: int) -> list[list[Fraction]]:
    m = linalg.zeros(DIM)
    m[i - 1][j - 1] = Fraction(1)
    return m


def _combo(*terms: tuple[int, int, int]) -> list[list[Fraction]]:
    m = linalg.zeros(DIM)
    for sign, i, j in terms:
        m[i - 1][j - 1] += sign
    return m


def is_sp_algebra(u) -> bool:
    """``U^T M + M U = 0`` for the Gram matrix ``M``."""
    return linalg.is_zero_matrix(
        linalg.mat_add(linalg.matmul(linalg.transpose(u), GRAM), linalg.matmul(GRAM, u)))


def is_symplectic(a) -> bool:
    return linalg.matmul(linalg.matmul(linalg.transpose(a), GRAM), a) == GRAM


def sp_basis() -> list[list[list[Fraction]]]:
    """The 21 square-zero basis matrices, row by row as printed."""
    p, n = 1, -1
    return [
        _combo((p, 1, 1), (p, 1, 4), (n, 4, 1), (n, 4, 4)), _unit(4, 1), _unit(5, 2), _unit(1, 4),
        _combo((p, 2, 2), (n, 2, 5), (p, 5, 2), (n, 5, 5)), _combo((p, 4, 2), (p, 5, 1)),
        _combo((p, 5, 3), (p, 6, 2)), _unit(2, 5),
        _combo((p, 3, 3), (n, 6, 6), (p, 3, 6), (n, 6, 3)), _combo((p, 4, 3), (p, 6, 1)),
        _unit(6, 3), _unit(3, 6),
        _combo((p, 1, 2), (n, 5, 4)), _combo((p, 3, 1), (n, 4, 6)), _combo((p, 1, 5), (p, 2, 4)),
        _combo((p, 2, 6), (p, 3, 5)),
        _combo((p, 2, 1), (n, 4, 5)), _combo((p, 2, 3), (n, 6, 5)), _combo((p, 1, 6), (p, 3, 4)),
        _combo((p, 1, 3), (n, 6, 4)),
        _combo((p, 3, 2), (n, 5, 6)),
    ]


# Free coordinates u_rs on sp(6); the remaining entries follow from DEPENDENT.
COORDINATES: tuple[tuple[int, int], ...] = (
    (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 1), (2, 2), (2, 3), (2, 5), (2, 6),
    (3, 1), (3, 2), (3, 3), (3, 6), (4, 1), (4, 2), (4, 3), (5, 2), (5, 3), (6, 3),
)

# dependent entry -> (sign, free entry)
DEPENDENT: dict[tuple[int, int], tuple[int, tuple[int, int]]] = {
    (2, 4): (1, (1, 5)), (3, 4): (1, (1, 6)), (3, 5): (1, (2, 6)), (5, 1): (1, (4, 2)),
    (6, 1): (1, (4, 3)), (6, 2): (1, (5, 3)), (4, 4): (-1, (1, 1)), (4, 5): (-1, (2, 1)),
    (4, 6): (-1, (3, 1)), (5, 4): (-1, (1, 2)), (5, 5): (-1, (2, 2)), (5, 6): (-1, (3, 2)),
    (6, 4): (-1, (1, 3)), (6, 5): (-1, (2, 3)), (6, 6): (-1, (3, 3)),
}


def sp_coordinates(u) -> list[Fraction]:
    if not is_sp_algebra(u):
        raise NotSymplecticError("matrix is not in sp(6)")
    return [Fraction(u[i - 1][j - 1]) for i, j in COORDINATES]


def sp_from_coordinates(coords) -> list[list[Fraction]]:
    if len(coords) != len(COORDINATES):
        raise ValueError(f"expected {len(COORDINATES)} coordinates, got {len(coords)}")
    u = linalg.zeros(DIM)
    values = dict(zip(COORDINATES, (Fraction(c) for c in coords)))
    for (i, j), c in values.items():
        u[i - 1][j - 1] = c
    for (i, j), (sign, src) in DEPENDENT.items():
        u[i - 1][j - 1] = sign * values[src]
    return u


def coordinate_element(r: int, s: int) -> list[list[Fraction]]:
    """The member of sp(6) with ``u_rs = 1`` and every other coordinate 0."""
    coords = [Fraction(int((i, j) == (r, s))) for i, j in COORDINATES]
    if (r, s) not in COORDINATES:
        raise KeyError(f"u_{r}{s} is not one of the free coordinates")
    return sp_from_coordinates(coords)


def shear(u, t) -> list[list[Fraction]]:
    """``I + t U`` for a square-zero ``U``; symplectic whenever ``U`` is in sp(6)."""
    if not linalg.is_zero_matrix(linalg.matmul(u, u)):
        raise ValueError("shear needs a square-zero matrix")
    a = linalg.mat_add(linalg.identity(DIM), linalg.mat_scale(Fraction(t), u))
    if not is_symplectic(a):
        raise NotSymplecticError("I + tU is not symplectic; U is not in sp(6)")
    return a


def random_small_rational(rng: random.Random, bound: int = 9, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if value or not nonzero:
            return value


def random_symplectic(seed: int, factors: int = 6) -> list[list[Fraction]]:
    """Deterministic product of ``factors`` random basis shears."""
    if factors < 0:
        raise ValueError("factors must be non-negative")
    rng = random.Random(seed)
    basis = sp_basis()
    a = linalg.identity(DIM)
    for _ in range(factors):
        u = basis[rng.randrange(len(basis))]
        a = linalg.matmul(a, shear(u, random_small_rational(rng, nonzero=True)))
    return a


def act(a, theta: Multivector) -> Multivector:
    return pullback(a, theta)
