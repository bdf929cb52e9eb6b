"""Seeded verification sweeps and independent linear-system oracles."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .exterior import BASIS, DIM, TRIPLES, Multivector, contract, evaluate, pullback, wedge
from .invariants import (TwoFormValuedMap, act_on_j, i1_appendix, i1_structural, i2_appendix,
                         i2_permutation, i2_structural, j_tensor, l_endo, v_vector)
from .symplectic import GRAM, OMEGA, act, omega_cubed, random_small_rational, random_symplectic


def random_trivector(rng: random.Random, bound: int = 9) -> Multivector:
    return Multivector(3, [random_small_rational(rng, bound) for _ in TRIPLES])


def _unit(h: int) -> list[Fraction]:
    return [Fraction(int(i == h)) for i in range(DIM)]


# --- oracles --------------------------------------------------------------------


def j_tensor_by_solve(theta: Multivector) -> TwoFormValuedMap:
    """Solve ``Omega(J(v_i, v_j), v_k) = theta(v_i, v_j, v_k)`` for each pair."""
    gram_t = linalg.transpose(GRAM)
    mu = [[[Fraction(0)] * DIM for _ in range(DIM)] for _ in range(DIM)]
    for i in range(DIM):
        for j in range(i + 1, DIM):
            rhs = [evaluate(theta, [_unit(i), _unit(j), _unit(k)]) for k in range(DIM)]
            sol = linalg.solve_linear(gram_t, rhs)
            for a in range(DIM):
                mu[a][i][j] = sol[a]
                mu[a][j][i] = -sol[a]
    return TwoFormValuedMap(tuple(tuple(tuple(r) for r in m) for m in mu))


def v_vector_by_solve(theta: Multivector) -> list[Fraction]:
    """Solve ``i_v(Omega^3) = theta ^ Omega`` for ``v``."""
    top = omega_cubed()
    cols = [contract(_unit(h), top).coeffs for h in range(DIM)]
    system = [[cols[h][r] for h in range(DIM)] for r in range(len(BASIS[5]))]
    return linalg.solve_linear(system, list(wedge(theta, OMEGA).coeffs))


# --- sweeps ---------------------------------------------------------------------


@dataclass
class SweepReport:
    name: str
    trials: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.trials} trials, {len(self.failures)} failures"


def _pairs(seed: int, trials: int, max_factors: int = 6):
    rng = random.Random(seed)
    for k in range(trials):
        theta = random_trivector(rng)
        a = random_symplectic(rng.randrange(2**32), rng.randint(1, max_factors))
        yield k, theta, a


def invariance_sweep(seed: int, trials: int) -> SweepReport:
    report = SweepReport("finite invariance")
    for k, theta, a in _pairs(seed, trials):
        report.trials += 1
        moved = act(a, theta)
        if i1_structural(moved) != i1_structural(theta):
            report.failures.append(f"trial {k}: I1 changed")
        if i2_structural(moved) != i2_structural(theta):
            report.failures.append(f"trial {k}: I2 changed")
        if pullback(a, OMEGA) != OMEGA:
            report.failures.append(f"trial {k}: A does not preserve Omega")
    return report


def equivariance_sweep(seed: int, trials: int) -> SweepReport:
    report = SweepReport("equivariance")
    for k, theta, a in _pairs(seed, trials):
        report.trials += 1
        moved = act(a, theta)
        if j_tensor(moved) != act_on_j(a, j_tensor(theta)):
            report.failures.append(f"trial {k}: J not equivariant")
        if v_vector(moved) != linalg.matvec(a, v_vector(theta)):
            report.failures.append(f"trial {k}: v not equivariant")
        conj = linalg.matmul(linalg.matmul(a, l_endo(theta)), linalg.inverse(a))
        if l_endo(moved) != conj:
            report.failures.append(f"trial {k}: L not conjugation-equivariant")
    return report


def route_sweep(seed: int, trials: int) -> SweepReport:
    report = SweepReport("route agreement")
    rng = random.Random(seed)
    for k in range(trials):
        theta = random_trivector(rng)
        report.trials += 1
        a1, b1 = i1_structural(theta), i1_appendix(theta)
        if a1 != b1:
            report.failures.append(f"trial {k}: I1 structural {a1} != appendix {b1}")
        s, p, x = i2_structural(theta), i2_permutation(theta), i2_appendix(theta)
        if not s == p == x:
            report.failures.append(f"trial {k}: I2 structural {s}, permutation {p}, appendix {x}")
    return report


def oracle_sweep(seed: int, trials: int) -> SweepReport:
    report = SweepReport("closed forms vs linear-system oracles")
    rng = random.Random(seed)
    for k in range(trials):
        theta = random_trivector(rng)
        report.trials += 1
        if j_tensor(theta) != j_tensor_by_solve(theta):
            report.failures.append(f"trial {k}: mu table disagrees with the solved J")
        if v_vector(theta) != v_vector_by_solve(theta):
            report.failures.append(f"trial {k}: x table disagrees with the solved v")
    return report
