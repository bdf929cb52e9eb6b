"""Acceptance criteria, one test per criterion, exact equality throughout.

Each test records a ``PASS``/``FAIL`` line; the lines are printed in the pytest
terminal summary, or directly when this file is run as a script.
"""

import random
from fractions import Fraction

from trivector_invariants import catalog, linalg
from trivector_invariants.infinitesimal import (field_matrix, independence_fixture, infinitesimal_check,
                                                random_points)
from trivector_invariants.invariants import (audit_appendix, bundled_term_list, char_poly, i1_appendix,
                                             i1_structural, l_endo)
from trivector_invariants.polynomial import Polynomial
from trivector_invariants.symplectic import is_sp_algebra, sp_basis
from trivector_invariants.verify import (equivariance_sweep, invariance_sweep, oracle_sweep,
                                         random_trivector, route_sweep)

SEED = 20240501
RESULTS: dict[int, str] = {}


def record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = f"{'PASS' if ok else 'FAIL'} criterion {n:2d}: {detail}"
    print(RESULTS[n])
    assert ok, RESULTS[n]


def _tables(family):
    report = catalog.reproduce_tables(5, SEED, families=(family,))
    forms = {e.form for e in report.entries}
    return report, forms


def test_01_dbk_tables():
    report, forms = _tables("DBK")
    per_param = all(
        len({e.params[p] for e in report.entries if e.form == name}) >= 5
        for name in forms for p in catalog.FORMS[name].params)
    ok = report.ok and len(forms) == 24 and per_param
    record(1, ok, f"DBK tables, {len(forms)} forms, {len(report.entries)} rows, "
                  f"{len(report.failures())} mismatches")


def test_02_popov_tables():
    report, forms = _tables("Popov")
    zero_rows = all(e.computed == (0, 0) for e in report.entries
                    if int(e.form[1:]) in (2, 7, 8, 9, 10, 11, 12, 13, 15, 17, 18, 19))
    p6 = all(e.computed == (-4 * e.params["p"] * e.params["q"],
                            -24 * e.params["q"] * (3 * e.params["q"] + 8 * e.params["p"]))
             for e in report.entries if e.form == "P6")
    sq = all(e.computed == (4 * e.params["q"] ** 2, 192 * e.params["q"] ** 2)
             for e in report.entries if e.form in ("P14", "P16"))
    ok = report.ok and len(forms) == 19 and zero_rows and p6 and sq
    record(2, ok, f"Popov tables, {len(forms)} forms, {len(report.entries)} rows, "
                  f"zero rows exact: {zero_rows}, P6: {p6}, P14/P16: {sq}")


def test_03_route_agreement():
    sweep = route_sweep(SEED, 100)
    audits = [audit_appendix(name) for name in ("i1", "i2")]
    listed = all(a.sidecar_matches for a in audits)
    both = all(c.printed != c.structural for a in audits for c in a.sidecar)
    ok = sweep.ok and sweep.trials >= 100 and listed and both
    n = sum(len(a.sidecar) for a in audits)
    record(3, ok, f"route agreement on {sweep.trials} trivectors, {len(sweep.failures)} failures, "
                  f"{n} sidecar correction(s) matching the audit")


def test_04_finite_invariance():
    sweep = invariance_sweep(SEED, 200)
    record(4, sweep.ok and sweep.trials >= 200,
           f"invariance of I1, I2 and Omega on {sweep.trials} pairs, {len(sweep.failures)} failures")


def test_05_equivariance():
    sweep = equivariance_sweep(SEED, 50)
    record(5, sweep.ok and sweep.trials >= 50,
           f"J, v, L equivariance on {sweep.trials} pairs, {len(sweep.failures)} failures")


def test_06_char_poly_shape():
    rng = random.Random(SEED)
    thetas = [random_trivector(rng) for _ in range(100)]
    thetas += [catalog.build(name, {p: Fraction(3, 2) for p in spec.params})
               for name, spec in catalog.FORMS.items()]
    bad = 0
    for theta in thetas:
        cp = char_poly(l_endo(theta))
        shape = cp[5] == cp[3] == cp[1] == cp[0] == 0 and cp[2] == cp[4] ** 2 / 4
        if not (shape and i1_structural(theta) == -18 * cp[4] == i1_appendix(theta)):
            bad += 1
    record(6, bad == 0, f"characteristic polynomial shape and I1 = -18 c4 = appendix on "
                        f"{len(thetas)} trivectors, {bad} failures")


def test_07_infinitesimal():
    points = random_points(SEED, 50)
    reports = [infinitesimal_check(bundled_term_list(n), points) for n in ("i1", "i2")]
    control = infinitesimal_check(Polynomial.variable(123), points[:1])
    ok = all(r.ok for r in reports) and not control.ok
    record(7, ok, f"21 fields annihilate I1, I2 at {len(points)} points "
                  f"({sum(r.checked for r in reports)} pairings); y123 control fails: {not control.ok}")


def test_08_rank():
    ranks = [linalg.rank(field_matrix(p)) for p in random_points(SEED + 1, 100)]
    det = independence_fixture()
    ok = max(ranks) <= 18 and ranks.count(18) >= 1 and det == 144
    record(8, ok, f"rank <= 18 at {len(ranks)} points (max {max(ranks)}, "
                  f"=18 at {ranks.count(18)}); independence determinant {det}")


def test_09_basis():
    basis = sp_basis()
    rank = linalg.rank([[x for row in u for x in row] for u in basis])
    square_zero = all(linalg.is_zero_matrix(linalg.matmul(u, u)) for u in basis)
    member = all(is_sp_algebra(u) for u in basis)
    ok = len(basis) == 21 and rank == 21 and square_zero and member
    record(9, ok, f"{len(basis)} basis matrices, rank {rank}, U^2 = 0: {square_zero}, in sp(6): {member}")


def test_10_oracles():
    sweep = oracle_sweep(SEED, 100)
    record(10, sweep.ok and sweep.trials >= 100,
           f"closed-form mu and x tables vs linear solves on {sweep.trials} trivectors, "
           f"{len(sweep.failures)} failures")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted((k, v) for k, v in globals().items() if k.startswith("test_")):
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
