"""Small exact linear algebra over the rationals.

Matrices are lists of rows. Elimination is fraction-free (Bareiss) on the
integer matrix obtained by clearing each row's denominators; rationals only
reappear in back-substitution.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


class SingularMatrixError(ValueError):
    """The matrix is not invertible."""


class NoSolutionError(SingularMatrixError):
    """The linear system is inconsistent."""


class NonUniqueSolutionError(SingularMatrixError):
    """The linear system has a positive-dimensional solution set."""


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(n: int, m: int | None = None) -> list[list[Fraction]]:
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


def as_matrix(rows) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def transpose(a):
    return [list(col) for col in zip(*a)]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(t, a):
    return [[t * x for x in row] for row in a]


def is_zero_matrix(a) -> bool:
    return all(x == 0 for row in a for x in row)


def _integer_rows(rows):
    """Scale each row to integers; return (int rows, per-row scale factors)."""
    out, scales = [], []
    for row in rows:
        row = [Fraction(x) for x in row]
        s = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * s) for x in row])
        scales.append(s)
    return out, scales


def _bareiss(m, ncols=None):
    """In-place fraction-free echelon form of an integer matrix.

    Only the first ``ncols`` columns are used as pivot columns. Returns the
    list of pivot columns and the sign of the row permutation applied.
    """
    nrows = len(m)
    ncols = len(m[0]) if ncols is None else ncols
    width = len(m[0]) if m else 0
    pivots = []
    sign = 1
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[p], m[r] = m[r], m[p]
            sign = -sign
        piv = m[r][c]
        for i in range(r + 1, nrows):
            f = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c, width):
                # exact: Sylvester's identity guarantees divisibility
                row_i[j] = (piv * row_i[j] - f * row_r[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    return pivots, sign


def det(a) -> Fraction:
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    m, scales = _integer_rows(a)
    pivots, sign = _bareiss(m)
    if len(pivots) < n:
        return Fraction(0)
    denom = 1
    for s in scales:
        denom *= s
    return Fraction(sign * m[n - 1][n - 1], denom)


def rank(a) -> int:
    if not a or not a[0]:
        return 0
    m, _ = _integer_rows(a)
    pivots, _ = _bareiss(m)
    return len(pivots)


def solve_linear(a, b) -> list[Fraction]:
    """Solve ``a x = b`` exactly for square or tall ``a``.

    Raises :class:`NoSolutionError` for an inconsistent system and
    :class:`NonUniqueSolutionError` when ``a`` has a nontrivial kernel.
    """
    n = len(a[0]) if a else 0
    if len(b) != len(a):
        raise ValueError("right-hand side length does not match the matrix")
    aug, _ = _integer_rows([list(row) + [rhs] for row, rhs in zip(a, b)])
    pivots, _ = _bareiss(aug, ncols=n)
    r = len(pivots)
    if any(aug[i][n] != 0 for i in range(r, len(aug))):
        raise NoSolutionError("inconsistent linear system")
    if r < n:
        raise NonUniqueSolutionError(f"solution is not unique (rank {r} < {n})")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        row = aug[i]
        acc = Fraction(row[n]) - sum((row[j] * x[j] for j in range(i + 1, n)), Fraction(0))
        x[i] = acc / row[i]
    return x


def inverse(a):
    n = len(a)
    try:
        cols = [solve_linear(a, [Fraction(int(i == j)) for i in range(n)]) for j in range(n)]
    except (NoSolutionError, NonUniqueSolutionError) as exc:
        raise SingularMatrixError("matrix is singular") from exc
    return transpose(cols)
