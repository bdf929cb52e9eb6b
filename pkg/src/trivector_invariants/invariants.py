"""The two basic symplectic invariants of a trivector.

``I1`` comes from the characteristic polynomial of the invariant endomorphism
``L = i_v J``; ``I2`` from the 6-form built out of ``J barwedge J``. Each is
also available from the explicit term lists shipped in ``data/``.

All structural routines only use ring operations on the trivector
coefficients (plus division by integer constants), so they accept a symbolic
trivector from :func:`~trivector_invariants.polynomial.symbolic_trivector`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from . import linalg
from .exterior import DIM, TRIPLES, Multivector, permutation_sign, top_coefficient, wedge
from .polynomial import Polynomial, symbolic_trivector
from .symplectic import GRAM, omega_cubed
from .termlist import Correction, TermList, load_bundled

_R = range(DIM)


class InvariantConsistencyError(RuntimeError):
    """An identity that holds for every trivector failed: an internal bug."""


def _zero(theta: Multivector):
    return theta.coeffs[0] * 0


# --- J^theta -----------------------------------------------------------------


@dataclass(frozen=True)
class TwoFormValuedMap:
    """``J = sum_{b<c} mu^a_bc v^b ^ v^c (x) v_a``.

    ``mu[a][b][c]`` (0-based) is stored for all ``b, c`` and is antisymmetric
    in them.
    """

    mu: tuple

    def coeff(self, a: int, b: int, c: int):
        """``mu^a_bc`` with 1-based indices."""
        return self.mu[a - 1][b - 1][c - 1]

    def __call__(self, x: Sequence, y: Sequence) -> list:
        """``J(x, y)`` as a component list."""
        out = []
        for a in _R:
            m = self.mu[a]
            acc = 0
            for b in _R:
                if x[b] == 0:
                    continue
                for c in _R:
                    if y[c] != 0 and m[b][c] != 0:
                        acc = acc + m[b][c] * x[b] * y[c]
            out.append(acc if not isinstance(acc, int) else Fraction(acc))
        return out

    def __eq__(self, other):
        if not isinstance(other, TwoFormValuedMap):
            return NotImplemented
        return all(self.mu[a][b][c] == other.mu[a][b][c] for a in _R for b in _R for c in _R)

    __hash__ = None  # type: ignore[assignment]


def _from_full(fn) -> TwoFormValuedMap:
    return TwoFormValuedMap(tuple(tuple(tuple(fn(a, b, c) for c in _R) for b in _R) for a in _R))


def j_tensor(theta: Multivector) -> TwoFormValuedMap:
    """Closed form: ``mu^h_ij = lambda_{ij,h+3}``, ``mu^{h+3}_ij = -lambda_{ij,h}``."""
    if theta.grade != 3:
        raise ValueError("j_tensor needs a trivector")

    def mu(a, b, c):
        if a < 3:
            return theta[(b + 1, c + 1, a + 4)]
        return -theta[(b + 1, c + 1, a - 2)]

    return _from_full(mu)


def act_on_j(a, j: TwoFormValuedMap) -> TwoFormValuedMap:
    """``(A.J)(x, y) = A J(A^-1 x, A^-1 y)``."""
    a_inv = linalg.inverse(a)
    # J(A^-1 v_b, A^-1 v_c) in components, then apply A
    cols = [[a_inv[i][k] for i in _R] for k in _R]
    table = [[j(cols[b], cols[c]) for c in _R] for b in _R]
    return _from_full(lambda r, b, c: sum((a[r][s] * table[b][c][s] for s in _R), Fraction(0)))


# --- v_theta and L_theta -------------------------------------------------------


def v_vector(theta: Multivector) -> list:
    t = theta
    sixth = Fraction(1, 6)
    return [
        -sixth * (t[(2, 4, 5)] + t[(3, 4, 6)]),
        sixth * (t[(1, 4, 5)] - t[(3, 5, 6)]),
        sixth * (t[(1, 4, 6)] + t[(2, 5, 6)]),
        -sixth * (t[(1, 2, 5)] + t[(1, 3, 6)]),
        -sixth * (t[(2, 3, 6)] - t[(1, 2, 4)]),
        sixth * (t[(1, 3, 4)] + t[(2, 3, 5)]),
    ]


def l_endo(theta: Multivector) -> list[list]:
    """Matrix of ``L = i_v J`` acting on columns: entry ``[a][i]`` is the
    ``v_a`` component of ``L(v_i) = sum_b x^b mu^a_bi``."""
    j = j_tensor(theta)
    x = v_vector(theta)
    zero = _zero(theta)
    out = []
    for a in _R:
        m = j.mu[a]
        row = []
        for i in _R:
            acc = zero
            for b in _R:
                if m[b][i] != 0 and x[b] != 0:
                    acc = acc + m[b][i] * x[b]
            row.append(acc)
        out.append(row)
    return out


# --- characteristic polynomial -------------------------------------------------


@dataclass(frozen=True)
class CharPoly:
    """``det(xI - M) = sum_k coeffs[k] x^k`` with ``coeffs[n] == 1``."""

    coeffs: tuple[Fraction, ...]

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def char_poly(m) -> CharPoly:
    """Faddeev-LeVerrier over the rationals."""
    n = len(m)
    m = linalg.as_matrix(m)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = linalg.zeros(n)
    eye = linalg.identity(n)
    for k in range(1, n + 1):
        mk = linalg.matmul(m, linalg.mat_add(mk, linalg.mat_scale(coeffs[n - k + 1], eye)))
        coeffs[n - k] = -sum((mk[i][i] for i in range(n)), Fraction(0)) / k
    return CharPoly(tuple(coeffs))


def principal_minor_sum2(m):
    """Sum of principal 2x2 minors, i.e. the ``x^(n-2)`` coefficient of the
    characteristic polynomial. Ring-generic."""
    n = len(m)
    acc = m[0][0] * 0
    for i in range(n):
        for j in range(i + 1, n):
            acc = acc + m[i][i] * m[j][j] - m[i][j] * m[j][i]
    return acc


def i1_structural(theta: Multivector) -> Fraction:
    """``I1 = -18 c4`` where ``det(xI - L) = x^6 + c4 x^4 + c2 x^2``."""
    cp = char_poly(l_endo(theta))
    c4 = cp[4]
    if cp[5] or cp[3] or cp[1] or cp[0] or cp[2] != c4 * c4 / 4:
        raise InvariantConsistencyError(f"unexpected characteristic polynomial {cp.coeffs}")
    return -18 * c4


# --- J barwedge J and I2 -------------------------------------------------------


@dataclass(frozen=True)
class BarWedgeTensor:
    """``xi[l][t]``: the ``v_l`` component on the sorted triple ``TRIPLES[t]``."""

    xi: tuple

    def coeff(self, l: int, i: int, j: int, k: int):
        s = permutation_sign((i, j, k))
        if s == 0:
            return self.xi[l - 1][0] * 0
        return s * self.xi[l - 1][TRIPLES.index(tuple(sorted((i, j, k))))]

    def form(self, l: int) -> Multivector:
        """The 3-form ``sum_{i<j<k} xi^l_ijk v^i ^ v^j ^ v^k``."""
        return Multivector(3, self.xi[l - 1])


def barwedge(j: TwoFormValuedMap) -> BarWedgeTensor:
    """``xi^l_ijk = mu^h_ij mu^l_hk + mu^h_jk mu^l_hi + mu^h_ki mu^l_hj``."""
    mu = j.mu
    zero = mu[0][0][0] * 0
    out = [[zero] * len(TRIPLES) for _ in _R]
    for t, (i, jj, k) in enumerate(TRIPLES):
        i, jj, k = i - 1, jj - 1, k - 1
        for l in _R:
            ml = mu[l]
            acc = zero
            for h in _R:
                mh = mu[h]
                for p, q, r in ((i, jj, k), (jj, k, i), (k, i, jj)):
                    a, b = mh[p][q], ml[h][r]
                    if a != 0 and b != 0:
                        acc = acc + a * b
            out[l][t] = acc
    return BarWedgeTensor(tuple(tuple(row) for row in out))


# xi lifted to ordered-index components: (3!)^2 between the sorted-pair 6-form
# and the full alternation that the normal-form tables use
_ORDERED_LIFT = 36


def i2_six_form(theta: Multivector) -> Multivector:
    xi = barwedge(j_tensor(theta))
    forms = [xi.form(l) for l in range(1, DIM + 1)]
    total = None
    for l in _R:
        for d in _R:
            w = GRAM[l][d]
            if w == 0:
                continue
            term = wedge(forms[l], forms[d]) * (w * _ORDERED_LIFT)
            total = term if total is None else total + term
    return total


def i2_structural(theta: Multivector) -> Fraction:
    """``Omega^theta = I2 * Omega^3``, ratio of top coefficients."""
    return top_coefficient(i2_six_form(theta)) / top_coefficient(omega_cubed())


@lru_cache(maxsize=None)
def _split_perms() -> tuple[tuple[int, int, int, int], ...]:
    """``(sign, first triple offset, sign of first, second ...)`` per permutation."""
    out = []
    for sigma in permutations(range(1, DIM + 1)):
        first, second = sigma[:3], sigma[3:]
        out.append((
            permutation_sign(sigma) * permutation_sign(first) * permutation_sign(second),
            TRIPLES.index(tuple(sorted(first))),
            TRIPLES.index(tuple(sorted(second))),
        ))
    return tuple(out)


def i2_permutation(theta: Multivector) -> Fraction:
    """``-(1/3) sum_sigma eps_sigma sum_{l=1..3} xi^l_sigma(123) xi^{l+3}_sigma(456)``."""
    xi = barwedge(j_tensor(theta)).xi
    total = _zero(theta)
    for sign, p, q in _split_perms():
        acc = xi[0][p] * xi[3][q] + xi[1][p] * xi[4][q] + xi[2][p] * xi[5][q]
        total = total + acc if sign > 0 else total - acc
    return total * Fraction(-1, 3)


# --- explicit term lists ---------------------------------------------------------


@lru_cache(maxsize=None)
def bundled_term_list(name: str) -> TermList:
    return load_bundled(name)


@lru_cache(maxsize=None)
def _appendix_polynomial(name: str, corrected: bool) -> Polynomial:
    return bundled_term_list(name).polynomial(corrected)


def i1_appendix(theta: Multivector, corrected: bool = True) -> Fraction:
    return _appendix_polynomial("i1", corrected)(theta)


def i2_appendix(theta: Multivector, corrected: bool = True) -> Fraction:
    return _appendix_polynomial("i2", corrected)(theta)


@lru_cache(maxsize=None)
def structural_polynomial(name: str) -> Polynomial:
    """``I1`` or ``I2`` as an explicit polynomial, from the structural route."""
    y = symbolic_trivector()
    if name == "i1":
        return principal_minor_sum2(l_endo(y)) * -18
    if name == "i2":
        return top_coefficient(i2_six_form(y)) / top_coefficient(omega_cubed())
    raise KeyError(name)


def audit_term_list(tl: TermList, reference: Polynomial) -> list[Correction]:
    """Monomials where the printed coefficients disagree with ``reference``.

    Coefficients are compared inside the prefactor.
    """
    inner = reference / tl.prefactor
    out = []
    for mono in sorted(set(tl.terms) | set(inner.terms)):
        printed = Fraction(tl.terms.get(mono, 0))
        true = inner.terms.get(mono, Fraction(0))
        if printed != true:
            out.append(Correction(mono, printed, true))
    return out


@dataclass
class AuditReport:
    name: str
    discrepancies: list[Correction]
    sidecar: list[Correction]

    @property
    def sidecar_matches(self) -> bool:
        key = lambda c: (c.monomial, c.printed, c.structural)  # noqa: E731
        return sorted(map(key, self.discrepancies)) == sorted(map(key, self.sidecar))


def audit_appendix(name: str) -> AuditReport:
    tl = bundled_term_list(name)
    return AuditReport(name, audit_term_list(tl, structural_polynomial(name)), list(tl.corrections))
