"""Exterior algebra of the dual of a 6-dimensional space.

Forms use the determinant convention: ``(v^1 ^ v^2)(x, y) = x^1 y^2 - x^2 y^1``.
Coefficients are stored densely, one slot per strictly increasing index tuple
in lexicographic order. Coefficients only need ``+``, ``-`` and ``*``, so the
same code runs on Fractions and on :class:`~trivector_invariants.polynomial.Polynomial`.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from . import linalg
from .linalg import SingularMatrixError, solve_linear  # noqa: F401  (re-export)

DIM = 6

BASIS: tuple[tuple[tuple[int, ...], ...], ...] = tuple(
    tuple(combinations(range(1, DIM + 1), r)) for r in range(DIM + 1)
)
OFFSET: tuple[dict[tuple[int, ...], int], ...] = tuple(
    {t: i for i, t in enumerate(basis)} for basis in BASIS
)
TRIPLES = BASIS[3]


class GradeError(ValueError):
    """A grade is out of range for the requested operation."""


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq``; 0 when an index repeats."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] == seq[j]:
                return 0
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def code(indices: Sequence[int]) -> int:
    """Integer code of an index tuple, e.g. ``(1, 3, 5) -> 135``."""
    out = 0
    for i in indices:
        out = 10 * out + i
    return out


def decode(c: int | str) -> tuple[int, ...]:
    """Inverse of :func:`code` for sorted tuples; validates the result."""
    digits = tuple(int(ch) for ch in str(c))
    if any(not 1 <= d <= DIM for d in digits) or list(digits) != sorted(set(digits)):
        raise ValueError(f"not a strictly increasing index code: {c!r}")
    return digits


def _zero_like(values):
    for v in values:
        return v * 0
    return Fraction(0)


class Multivector:
    """An element of the ``grade``-th exterior power of V*."""

    __slots__ = ("grade", "coeffs")

    def __init__(self, grade: int, coeffs: Iterable | None = None):
        if not 0 <= grade <= DIM:
            raise GradeError(f"grade {grade} outside 0..{DIM}")
        size = len(BASIS[grade])
        if coeffs is None:
            coeffs = (Fraction(0),) * size
        else:
            coeffs = tuple(c if not isinstance(c, int) else Fraction(c) for c in coeffs)
            if len(coeffs) != size:
                raise ValueError(f"grade {grade} needs {size} coefficients, got {len(coeffs)}")
        self.grade = grade
        self.coeffs = coeffs

    @classmethod
    def from_dict(cls, grade: int, terms: Mapping[Sequence[int], object]) -> "Multivector":
        """Build from ``{index tuple: coefficient}``; unsorted tuples are signed."""
        out = [Fraction(0)] * len(BASIS[grade])
        for idx, c in terms.items():
            idx = tuple(idx)
            if len(idx) != grade:
                raise GradeError(f"index tuple {idx} does not have grade {grade}")
            s = permutation_sign(idx)
            if s == 0:
                continue
            out[OFFSET[grade][tuple(sorted(idx))]] += s * c
        return cls(grade, out)

    @classmethod
    def basis_form(cls, *indices: int) -> "Multivector":
        return cls.from_dict(len(indices), {indices: Fraction(1)})

    def __getitem__(self, idx: Sequence[int]):
        idx = tuple(idx)
        if len(idx) != self.grade:
            raise GradeError(f"index tuple {idx} does not have grade {self.grade}")
        s = permutation_sign(idx)
        if s == 0:
            return _zero_like(self.coeffs)
        c = self.coeffs[OFFSET[self.grade][tuple(sorted(idx))]]
        return c if s > 0 else -c

    def items(self):
        """Nonzero ``(sorted tuple, coefficient)`` pairs."""
        return [(t, c) for t, c in zip(BASIS[self.grade], self.coeffs) if c != 0]

    def to_dict(self) -> dict[tuple[int, ...], object]:
        return dict(self.items())

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        if other.grade != self.grade:
            raise GradeError("cannot add multivectors of different grade")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Multivector(self.grade, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Multivector(self.grade, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return Multivector(self.grade, [-a for a in self.coeffs])

    def __mul__(self, t):
        if isinstance(t, Multivector):
            return NotImplemented
        return Multivector(self.grade, [t * a for a in self.coeffs])

    __rmul__ = __mul__

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.grade == other.grade and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.grade, self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return f"Multivector({self.grade}, 0)"
        terms = " + ".join(f"{c}*v{''.join(map(str, t))}" for t, c in self.items())
        return f"Multivector({self.grade}, {terms})"


def trivector(terms: Mapping | None = None, **kw) -> Multivector:
    """Trivector from ``{(a, b, c): coeff}`` or keywords like ``y135=2``."""
    terms = dict(terms or {})
    for name, value in kw.items():
        terms[decode(name.lstrip("y"))] = value
    return Multivector.from_dict(3, {k: Fraction(v) if isinstance(v, (int, str)) else v
                                     for k, v in terms.items()})


def wedge(u: Multivector, w: Multivector) -> Multivector:
    r, s = u.grade, w.grade
    if r + s > DIM:
        raise GradeError(f"wedge of grades {r} and {s} exceeds {DIM}")
    ua, wa = u.items(), w.items()
    out = [_zero_like(u.coeffs)] * len(BASIS[r + s])
    offs = OFFSET[r + s]
    for i, a in ua:
        for j, b in wa:
            sgn = permutation_sign(i + j)
            if sgn == 0:
                continue
            k = offs[tuple(sorted(i + j))]
            out[k] = out[k] + (a * b if sgn > 0 else -(a * b))
    return Multivector(r + s, out)


def contract(x: Sequence, w: Multivector) -> Multivector:
    """Interior product into the first slot: ``(i_x w)(y...) = w(x, y...)``."""
    if w.grade == 0:
        raise GradeError("cannot contract a vector into a 0-form")
    r = w.grade
    out = [_zero_like(w.coeffs)] * len(BASIS[r - 1])
    offs = OFFSET[r - 1]
    for idx, c in w.items():
        for pos, i in enumerate(idx):
            xi = x[i - 1]
            if xi == 0:
                continue
            rest = idx[:pos] + idx[pos + 1:]
            term = c * xi
            k = offs[rest]
            out[k] = out[k] + (term if pos % 2 == 0 else -term)
    return Multivector(r - 1, out)


def evaluate(w: Multivector, vectors: Sequence[Sequence]) -> object:
    """Value of the form on ``grade`` vectors (determinant convention)."""
    if len(vectors) != w.grade:
        raise GradeError(f"a {w.grade}-form takes {w.grade} vectors, got {len(vectors)}")
    total = _zero_like(w.coeffs)
    for idx, c in w.items():
        minor = [[vec[i - 1] for vec in vectors] for i in idx]
        total = total + c * _det_small(minor)
    return total


def _det_small(m):
    n = len(m)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        sub = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det_small(sub)
        total = total + term if j % 2 == 0 else total - term
    return total


def pullback(a: Sequence[Sequence], w: Multivector) -> Multivector:
    """The ``GL(V)`` action ``(A.w)(x_1, ...) = w(A^-1 x_1, ...)``."""
    a_inv = linalg.inverse(a)  # raises SingularMatrixError
    return pullback_by_inverse(a_inv, w)


def pullback_by_inverse(a_inv: Sequence[Sequence], w: Multivector) -> Multivector:
    """Same as :func:`pullback` given ``A^-1`` directly."""
    cols = [[a_inv[i][j] for i in range(DIM)] for j in range(DIM)]  # A^-1 v_j
    return Multivector(w.grade, [evaluate(w, [cols[j - 1] for j in idx]) for idx in BASIS[w.grade]])


def top_coefficient(w: Multivector):
    if w.grade != DIM:
        raise GradeError(f"expected a {DIM}-form, got grade {w.grade}")
    return w.coeffs[0]
