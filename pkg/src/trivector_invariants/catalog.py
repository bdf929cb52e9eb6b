"""Normal forms of trivectors under the symplectic group, with the tabulated
values of the two invariants on each.

Dual basis dictionary: ``e1, e2, e3, f1, f2, f3 = v^1, ..., v^6``. Forms are
assembled with :func:`~trivector_invariants.exterior.wedge`, so unsorted
products get their sign from the exterior kernel.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .exterior import Multivector, wedge
from .invariants import i1_structural, i2_structural
from .scalar import as_rational, format_rational

e1, e2, e3, f1, f2, f3 = (Multivector.basis_form(i) for i in range(1, 7))


def w(*forms: Multivector) -> Multivector:
    out = forms[0]
    for f in forms[1:]:
        out = wedge(out, f)
    return out


class CatalogError(ValueError):
    pass


class UnknownFormError(CatalogError, KeyError):
    def __str__(self):
        return self.args[0] if self.args else ""


class MissingParameterError(CatalogError):
    pass


class ConstraintError(CatalogError):
    pass


class CharacteristicTwoFormError(UnknownFormError):
    """E1', E2', E3' only exist in characteristic 2."""


@dataclass(frozen=True)
class NormalFormSpec:
    name: str
    family: str
    params: tuple[str, ...]
    builder: Callable[..., Multivector]
    expected: Callable[..., tuple[Fraction, Fraction]]
    constraint: Callable[..., str | None] = field(default=lambda **_: None)

    def check(self, values: Mapping[str, Fraction]) -> dict[str, Fraction]:
        missing = [p for p in self.params if p not in values]
        if missing:
            raise MissingParameterError(f"{self.name} needs parameter(s) {', '.join(missing)}")
        extra = [p for p in values if p not in self.params]
        if extra:
            raise MissingParameterError(f"{self.name} takes no parameter(s) {', '.join(extra)}")
        kw = {p: as_rational(values[p]) for p in self.params}
        problem = self.constraint(**kw)
        if problem:
            raise ConstraintError(f"{self.name}: {problem}")
        return kw


def _zero(**_):
    return Fraction(0), Fraction(0)


def _nonzero(*names):
    def check(**kw):
        bad = [n for n in names if kw[n] == 0]
        return f"{', '.join(bad)} must be nonzero" if bad else None
    return check


def _e4_constraint(a, b, k, h1, h2):
    if h1 * h2 * (a * a + 4 * b) == 1:
        return "h1*h2*(a^2+4b) must differ from 1"
    return None


def _c6_constraint(lam, eps):
    if eps in (0, -1):
        return "eps must differ from 0 and -1"
    return None


def _e1_form(a, b, h1, h2, h3):
    return (2 * w(e1, e2, e3)
            + a * (h1 * w(f1, e2, e3) + h2 * w(e1, f2, e3) + h3 * w(e1, e2, f3))
            + (a * a + 2 * b) * (h1 * h2 * w(f1, f2, e3) + h1 * h3 * w(f1, e2, f3) + h2 * h3 * w(e1, f2, f3))
            + h1 * h2 * h3 * (a * a + 3 * b) * w(f1, f2, f3))


def _e1_expected(a, b, h1, h2, h3):
    i2 = -72 * (h1 * h2 * h3) ** 2 * (4 * (a * a + 3 * b) ** 2 * (1 - 2 * a)
                                      + (a * a + 2 * b) ** 2 * (5 * a * a + 16 * b))
    return Fraction(0), i2


def _e2_form(a, b, k):
    return w(e1, e2, f2) + w(e1, e3, f3) + k * (w(f1, e2, f3) - b * w(f1, f2, e3) + a * w(f1, e3, f3))


def _e23_expected(a, b, k, h=None):
    s = a * a + 4 * b
    return k * k * s, 48 * k * k * s


def _e4_form(a, b, k, h1, h2):
    s = a * a + 4 * b
    g = 1 - h1 * h2 * s
    return (g * w(e1, e2, f2) + (1 + h1 * h2 * s) * w(e1, e3, f3)
            + k * (w(f1, e2, f3) - b * g * w(f1, f2, e3) + a * w(f1, e3, f3))
            + h1 * g * w(e1, f2, f3) + s * h2 * w(e1, e2, e3))


def _e4_expected(a, b, k, h1, h2):
    s = a * a + 4 * b
    return k * k * s * (1 - s * h1 * h2), 24 * k * k * s * (1 - s * h1 * h2) * (2 + 3 * s * h1 * h2)


def _e5_form(a, b, k):
    return (w(f1, e2, f3) + 2 * w(e1, f1, e2) - a * w(f1, e2, f2) + a * w(f1, e3, f3)
            + a * w(e1, f1, e3) + (a * a + b) * w(f1, f2, e3)
            + k * (a * w(e1, f2, e3) - w(e1, e2, f2) + w(e1, e3, f3)))


def _p10():
    return w(e1, f1, e3) + w(f2, e2, e3) + w(e1, e2, f3)


def _p15():
    return w(e1, f1, e3) + w(f2, e2, e3)


def _p4(q):
    return w(e1, e2, e3) + q * w(f1, f2, f3) + w(e1, e2, f2) + w(e1, e3, f3)


def _p18():
    return _p15() + w(e1, e2, f2) + w(e1, e2, f3)


_F = Fraction


def _spec(name, family, params, builder, expected=_zero, constraint=None):
    kw = {} if constraint is None else {"constraint": constraint}
    return NormalFormSpec(name, family, tuple(params), builder, expected, **kw)


_C_ZERO_I1 = lambda lam: (_F(0), -72 * lam * lam)  # noqa: E731
_C_SQUARE = lambda lam: (lam * lam, 48 * lam * lam)  # noqa: E731

_FORMS: list[NormalFormSpec] = [
    _spec("A1", "DBK", (), lambda: w(e1, e2, e3)),
    _spec("A2", "DBK", (), lambda: w(e1, e2, f2)),
    _spec("B1", "DBK", (), lambda: w(e1, e2, e3) + w(e1, f1, f3)),
    _spec("B2", "DBK", (), lambda: w(e1, e2, f2) + w(e1, f1, e3)),
    _spec("B3", "DBK", (), lambda: w(e1, e2, f2) + w(e1, e3, f3)),
    _spec("B4", "DBK", ("lam",), lambda lam: w(e1, e2, e3) + lam * w(e1, f2, f3)),
    _spec("B5", "DBK", ("lam",), lambda lam: lam * w(e1, e2, f2) + w(e1, e2 - e3, f2 + f3)),
    _spec("C1", "DBK", ("lam",), lambda lam: w(e1, e2, e3) + lam * w(f1, f2, f3), _C_ZERO_I1),
    _spec("C2", "DBK", ("lam",), lambda lam: w(f1, e2 + e3, f2 - f3) + lam * w(e1, e2, f2), _C_ZERO_I1),
    _spec("C3", "DBK", ("lam",), lambda lam: w(e1, e2, f2) + lam * w(f1, e3, f3), _C_SQUARE),
    _spec("C4", "DBK", ("lam",), lambda lam: w(f1, e3, e2 + f3) + lam * w(e1, e2, f2), _C_SQUARE),
    _spec("C5", "DBK", ("lam",), lambda lam: w(e1, e3, f2 + f3) + lam * w(e2, f3, f1 + e3), _C_ZERO_I1),
    _spec("C6", "DBK", ("lam", "eps"),
          lambda lam, eps: w(f1, e2 + e3, f2 + eps * f3) + lam * w(e1, e2, f2),
          lambda lam, eps: (lam * lam * eps * (eps + 1), 24 * lam * lam * eps * (2 * eps + 5)),
          _c6_constraint),
    _spec("D1", "DBK", (), lambda: w(e1, e2, f2) + w(e2, f1, e3) + w(f1, e1, f3)),
    _spec("D2", "DBK", ("lam",), lambda lam: lam * w(e1, e2, f3) + w(e2, f1, e3) + w(f1, e1, f2),
          lambda lam: (lam, 120 * lam)),
    _spec("D3", "DBK", ("lam1", "lam2"),
          lambda lam1, lam2: w(e1, e2, f3) + lam1 * w(e2, e3, f1) + lam2 * w(e3, e1, f2)),
    _spec("D4", "DBK", ("lam1", "lam2"),
          lambda lam1, lam2: w(e1, e2, f3) + lam1 * w(e2, e3, f1 + f3) + lam2 * w(e3, e1, f2)),
    _spec("D5", "DBK", ("lam",),
          lambda lam: w(e1, e2, f3) + lam * w(e2, e3, f1 + f2 + f3) - w(e3, e1, f2)),
    _spec("D6", "DBK", (), lambda: -w(e1, e2, f2) + w(e2, e3, f1) + w(e3, e1, f3)),
    _spec("E1", "DBK", ("a", "b", "h1", "h2", "h3"), _e1_form, _e1_expected),
    _spec("E2", "DBK", ("a", "b", "k"), _e2_form, _e23_expected),
    _spec("E3", "DBK", ("a", "b", "k", "h"),
          lambda a, b, k, h: _e2_form(a, b, k) + h * w(e1, f2, f3), _e23_expected),
    _spec("E4", "DBK", ("a", "b", "k", "h1", "h2"), _e4_form, _e4_expected, _e4_constraint),
    _spec("E5", "DBK", ("a", "b", "k"), _e5_form,
          lambda a, b, k: (_F(0), -72 * k * k * (a * a + 4 * b))),
    # Popov, q and p nonzero
    _spec("P1", "Popov", (), lambda: Multivector(3)),
    _spec("P2", "Popov", (), lambda: w(e1, e2, f2) + w(e1, e3, f3)),
    _spec("P3", "Popov", ("q",), lambda q: w(e1, e2, e3) + q * w(f1, f2, f3), lambda q: (_F(0), -72 * q * q),
          _nonzero("q")),
    _spec("P4", "Popov", ("q",), _p4, lambda q: (_F(0), -72 * q * q), _nonzero("q")),
    _spec("P5", "Popov", ("q",), lambda q: _p4(q) + w(f2, e1, f1) + w(f2, e3, f3),
          lambda q: (_F(0), -72 * q * q), _nonzero("q")),
    _spec("P6", "Popov", ("q", "p"), lambda q, p: _p4(q) + p * w(f1, e2, f2) + p * w(f1, e3, f3),
          lambda q, p: (-4 * p * q, -24 * q * (3 * q + 8 * p)), _nonzero("q", "p")),
    _spec("P7", "Popov", (), lambda: w(e1, e2, e3)),
    _spec("P8", "Popov", (), lambda: w(e1, e2, e3) + w(e1, e2, f2) + w(e1, e3, f3)),
    _spec("P9", "Popov", (), lambda: w(e1, e2, e3) + w(f1, e2, f2) + w(f1, e3, f3)),
    _spec("P10", "Popov", (), _p10),
    _spec("P11", "Popov", (), lambda: _p10() + w(e1, e2, f2) + w(e1, e3, f3)),
    _spec("P12", "Popov", ("q",), lambda q: _p10() + q * w(e3, e1, f1) + q * w(e3, e2, f2),
          constraint=_nonzero("q")),
    _spec("P13", "Popov", (), lambda: _p10() + w(f1, e2, f2) + w(f1, e3, f3)),
    _spec("P14", "Popov", ("q",), lambda q: _p10() + q * w(f3, e1, f1) + q * w(f3, e2, f2),
          lambda q: (4 * q * q, 192 * q * q), _nonzero("q")),
    _spec("P15", "Popov", (), _p15),
    _spec("P16", "Popov", ("q",), lambda q: _p15() + q * w(f3, e1, f1) + q * w(f3, e2, f2),
          lambda q: (4 * q * q, 192 * q * q), _nonzero("q")),
    _spec("P17", "Popov", ("q",), lambda q: _p15() + q * w(e3, e1, f1) + q * w(e3, e2, f2),
          constraint=_nonzero("q")),
    _spec("P18", "Popov", (), _p18),
    _spec("P19", "Popov", (), lambda: _p18() + w(e2, e1, f1) + w(e2, e3, f3)),
]

FORMS: dict[str, NormalFormSpec] = {f.name: f for f in _FORMS}

_CHAR2 = {"E1'", "E2'", "E3'"}
_PARAM_ALIASES = {"lambda": "lam", "λ": "lam", "l": "lam", "epsilon": "eps", "ε": "eps",
                  "lambda1": "lam1", "lambda2": "lam2", "λ1": "lam1", "λ2": "lam2"}


def lookup(name: str) -> NormalFormSpec:
    key = name.strip().upper().replace("′", "'")
    for prefix in ("CHI_", "X_"):
        if key.startswith(prefix):
            key = key[len(prefix):]
    if key in _CHAR2:
        raise CharacteristicTwoFormError(
            f"{key} exists only in characteristic 2, which is excluded here")
    try:
        return FORMS[key]
    except KeyError:
        raise UnknownFormError(f"unknown normal form {name!r}") from None


def _normalize_params(params: Mapping | None) -> dict:
    return {_PARAM_ALIASES.get(k, k): v for k, v in (params or {}).items()}


def build(name: str, params: Mapping | None = None, **kw) -> Multivector:
    spec = lookup(name)
    values = spec.check(_normalize_params({**(params or {}), **kw}))
    return spec.builder(**values)


def expected(name: str, params: Mapping | None = None, **kw) -> tuple[Fraction, Fraction]:
    spec = lookup(name)
    values = spec.check(_normalize_params({**(params or {}), **kw}))
    i1, i2 = spec.expected(**values)
    return Fraction(i1), Fraction(i2)


# --- table reproduction ---------------------------------------------------------------

GRID: tuple[Fraction, ...] = tuple(
    Fraction(n, d) for n, d in [(1, 1), (-1, 1), (2, 1), (1, 2), (-3, 1), (3, 2), (-2, 3),
                                (5, 1), (-5, 4), (7, 3), (4, 1), (-7, 2), (9, 5), (-9, 1), (0, 1)]
)


@dataclass
class TableEntry:
    form: str
    params: dict[str, Fraction]
    computed: tuple[Fraction, Fraction]
    expected: tuple[Fraction, Fraction]

    @property
    def ok(self) -> bool:
        return self.computed == self.expected

    def to_json(self) -> dict:
        return {
            "form": self.form,
            "params": {k: format_rational(v) for k, v in self.params.items()},
            "computed": {"I1": format_rational(self.computed[0]), "I2": format_rational(self.computed[1])},
            "expected": {"I1": format_rational(self.expected[0]), "I2": format_rational(self.expected[1])},
            "ok": self.ok,
        }

    def line(self) -> str:
        params = ", ".join(f"{k}={format_rational(v)}" for k, v in self.params.items())
        status = "PASS" if self.ok else "FAIL"
        c1, c2 = map(format_rational, self.computed)
        x1, x2 = map(format_rational, self.expected)
        return f"{status} {self.form}({params}) I1={c1} I2={c2} expected I1={x1} I2={x2}"


@dataclass
class TableReport:
    entries: list[TableEntry]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def failures(self) -> list[TableEntry]:
        return [e for e in self.entries if not e.ok]

    def lines(self) -> list[str]:
        return [e.line() for e in self.entries]

    def to_json(self) -> dict:
        return {"ok": self.ok, "count": len(self.entries),
                "failures": len(self.failures()), "entries": [e.to_json() for e in self.entries]}


def _admissible(spec: NormalFormSpec, values: dict) -> bool:
    return not spec.constraint(**values)


def parameter_tuples(spec: NormalFormSpec, samples: int, rng: random.Random,
                     bases: int = 2) -> list[dict[str, Fraction]]:
    """Deterministic grid: ``bases`` base tuples, then each parameter swept over
    ``samples`` distinct grid values with the others held at a base tuple."""
    if not spec.params:
        return [{}]
    if samples > len(GRID):
        raise ValueError(f"at most {len(GRID)} samples per parameter")
    base_tuples: list[dict] = []
    while len(base_tuples) < bases:
        cand = {p: GRID[rng.randrange(len(GRID) - 1)] for p in spec.params}  # skip 0 in bases
        if _admissible(spec, cand) and cand not in base_tuples:
            base_tuples.append(cand)
    out: list[dict] = []
    for base in base_tuples:
        for p in spec.params:
            taken = 0
            for value in GRID:
                cand = dict(base, **{p: value})
                if not _admissible(spec, cand):
                    continue
                if cand not in out:
                    out.append(cand)
                taken += 1
                if taken == samples:
                    break
            if taken < samples:
                raise ValueError(f"{spec.name}: not enough admissible values for {p}")
    return out


def evaluate_form(name: str, params: Mapping | None = None) -> TableEntry:
    spec = lookup(name)
    values = spec.check(_normalize_params(params))
    theta = spec.builder(**values)
    exp = spec.expected(**values)
    return TableEntry(spec.name, values, (i1_structural(theta), i2_structural(theta)),
                      (Fraction(exp[0]), Fraction(exp[1])))


def reproduce_tables(samples_per_param: int = 5, seed: int = 0,
                     families: tuple[str, ...] = ("DBK", "Popov")) -> TableReport:
    if samples_per_param < 5:
        raise ValueError("samples_per_param must be at least 5")
    rng = random.Random(seed)
    entries = []
    for spec in _FORMS:
        if spec.family not in families:
            continue
        for values in parameter_tuples(spec, samples_per_param, rng):
            entries.append(evaluate_form(spec.name, values))
    return TableReport(entries)
