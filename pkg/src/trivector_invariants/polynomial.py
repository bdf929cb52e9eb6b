"""Sparse polynomials in the trivector coordinates ``y_abc``.

A monomial is a sorted tuple of variable codes (``135`` for ``y_135``), repeated
once per power, so ``y_135 y_256^2`` is ``(135, 256, 256)``. The class supports
the ring operations the structural routines use, which lets them run on a
symbolic trivector as well as on rational ones.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping

from .exterior import TRIPLES, Multivector, code

VARIABLES: tuple[int, ...] = tuple(code(t) for t in TRIPLES)
_VAR_INDEX = {v: i for i, v in enumerate(VARIABLES)}

Monomial = tuple[int, ...]


class Polynomial:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                key = tuple(sorted(mono))
                clean[key] = clean.get(key, Fraction(0)) + c
                if not clean[key]:
                    del clean[key]
        self.terms = clean

    @classmethod
    def variable(cls, var: int) -> "Polynomial":
        if var not in _VAR_INDEX:
            raise KeyError(f"unknown variable y_{var}")
        return cls({(var,): 1})

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls({(): c})

    @staticmethod
    def _lift(other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial({(): other})
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, Fraction(0)) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial()
            return _raw({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return _raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "Polynomial(0)"
        return "Polynomial(" + " + ".join(
            f"{c}*" + "*".join(f"y{v}" for v in m) for m, c in sorted(self.terms.items())) + ")"

    def degrees(self) -> set[int]:
        return {len(m) for m in self.terms}

    def __call__(self, point) -> Fraction:
        """Evaluate at a trivector or a ``{code: value}`` mapping."""
        values = _point_values(point)
        total = Fraction(0)
        for mono, c in self.terms.items():
            p = c
            for v in mono:
                p *= values[v]
                if not p:
                    break
            total += p
        return total

    def partial(self, var: int) -> "Polynomial":
        out: dict[Monomial, Fraction] = {}
        for mono, c in self.terms.items():
            k = mono.count(var)
            if k:
                i = mono.index(var)
                rest = mono[:i] + mono[i + 1:]
                out[rest] = out.get(rest, Fraction(0)) + k * c
        return Polynomial(out)

    def gradient(self, point) -> list[Fraction]:
        """Exact partials ``dI/dy_abc`` at ``point``, in :data:`VARIABLES` order.

        Power rule per monomial: a variable of multiplicity ``k`` contributes
        ``k * c * (monomial with one copy removed)``.
        """
        values = _point_values(point)
        grad = [Fraction(0)] * len(VARIABLES)
        for mono, c in self.terms.items():
            counts = Counter(mono)
            for var, k in counts.items():
                p = c * k
                skipped = False
                for v in mono:
                    if v == var and not skipped:
                        skipped = True
                        continue
                    p *= values[v]
                grad[_VAR_INDEX[var]] += p
        return grad


def _raw(terms: dict[Monomial, Fraction]) -> Polynomial:
    p = Polynomial.__new__(Polynomial)
    p.terms = terms
    return p


def _point_values(point) -> Mapping[int, Fraction]:
    if isinstance(point, Multivector):
        return dict(zip(VARIABLES, point.coeffs))
    return point


def symbolic_trivector() -> Multivector:
    """The generic trivector ``sum y_abc v^a ^ v^b ^ v^c``."""
    return Multivector(3, [Polynomial.variable(v) for v in VARIABLES])


def monomial_text(mono: Iterable[int]) -> str:
    return " ".join(str(v) for v in mono)
