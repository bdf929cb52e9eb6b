"""Line-oriented term-list files for explicit invariant polynomials.

One term per line, ``<signed integer> <triple> <triple> <triple> <triple>``,
for example ``+1 135 234 256 256``. ``#`` starts a comment; a header comment
``# prefactor: 24`` sets the global factor multiplying every term.

A JSON corrections sidecar records monomials whose printed coefficient
disagrees with the structural computation, with both readings.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .exterior import decode
from .polynomial import Monomial, Polynomial
from .scalar import format_rational, parse_rational

DEGREE = 4
SIDECAR_VERSION = 1

_PREFACTOR_RE = re.compile(r"^#\s*prefactor:\s*(\S+)\s*$")
_COEFF_RE = re.compile(r"^[+-]\d+$")


class TermListError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}".strip())
        self.line = line
        self.source = source


@dataclass
class Correction:
    monomial: Monomial
    printed: Fraction
    structural: Fraction

    def to_json(self) -> dict:
        return {
            "monomial": " ".join(map(str, self.monomial)),
            "printed": format_rational(self.printed),
            "structural": format_rational(self.structural),
        }


@dataclass
class TermList:
    """An explicit degree-4 polynomial: ``prefactor * sum(coeff * monomial)``."""

    terms: dict[Monomial, int]
    prefactor: Fraction = Fraction(1)
    corrections: list[Correction] = field(default_factory=list)

    def polynomial(self, corrected: bool = True) -> Polynomial:
        inner = dict(self.terms)
        if corrected:
            for c in self.corrections:
                inner[c.monomial] = c.structural
        return Polynomial(inner) * self.prefactor

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items())

    def dumps(self, title: str | None = None) -> str:
        lines = []
        if title:
            lines.append(f"# {title}")
        lines.append(f"# prefactor: {format_rational(self.prefactor)}")
        for mono, c in self.sorted_terms():
            lines.append(f"{c:+d} " + " ".join(str(v) for v in mono))
        return "\n".join(lines) + "\n"


def parse_term_list(text: str, source: str | None = None) -> TermList:
    prefactor = Fraction(1)
    terms: dict[Monomial, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _PREFACTOR_RE.match(line)
            if m:
                try:
                    prefactor = parse_rational(m.group(1))
                except (ValueError, ZeroDivisionError) as exc:
                    raise TermListError(f"bad prefactor {m.group(1)!r}", lineno, source) from exc
            continue
        line = line.split("#", 1)[0].split()
        if not _COEFF_RE.match(line[0]):
            raise TermListError(f"coefficient must be a signed integer, got {line[0]!r}", lineno, source)
        if len(line) != 1 + DEGREE:
            raise TermListError(f"expected {DEGREE} triples, got {len(line) - 1}", lineno, source)
        try:
            mono = tuple(sorted(int("".join(map(str, decode(tok)))) for tok in line[1:]))
        except ValueError as exc:
            raise TermListError(str(exc), lineno, source) from exc
        if any(len(str(v)) != 3 for v in mono):
            raise TermListError("variables must be 3-digit triples", lineno, source)
        if mono in terms:
            raise TermListError(f"duplicate monomial {' '.join(map(str, mono))}", lineno, source)
        coeff = int(line[0])
        if coeff == 0:
            raise TermListError("zero coefficient", lineno, source)
        terms[mono] = coeff
    return TermList(terms, prefactor)


def parse_corrections(text: str, source: str | None = None) -> list[Correction]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TermListError(f"invalid JSON: {exc.msg}", exc.lineno, source) from exc
    if doc.get("version") != SIDECAR_VERSION:
        raise TermListError(f"unsupported corrections version {doc.get('version')!r}", None, source)
    out = []
    for entry in doc.get("corrections", []):
        try:
            mono = tuple(sorted(int(v) for v in entry["monomial"].split()))
            for v in mono:
                decode(v)
            out.append(Correction(mono, parse_rational(entry["printed"]),
                                  parse_rational(entry["structural"])))
        except (KeyError, ValueError) as exc:
            raise TermListError(f"bad correction entry {entry!r}", None, source) from exc
    return out


def dumps_corrections(name: str, corrections: list[Correction], note: str = "") -> str:
    doc = {
        "version": SIDECAR_VERSION,
        "invariant": name,
        "note": note,
        "corrections": [c.to_json() for c in sorted(corrections, key=lambda c: c.monomial)],
    }
    return json.dumps(doc, indent=2) + "\n"


def load_term_list(path: str | Path, corrections: str | Path | None = None) -> TermList:
    path = Path(path)
    tl = parse_term_list(path.read_text(), source=str(path))
    if corrections is not None:
        cpath = Path(corrections)
        tl.corrections = parse_corrections(cpath.read_text(), source=str(cpath))
    return tl


def load_bundled(name: str) -> TermList:
    """Load ``i1`` or ``i2`` from the package data, corrections applied on use."""
    data = resources.files("trivector_invariants") / "data"
    tl = parse_term_list((data / f"{name}_terms.txt").read_text(), source=f"{name}_terms.txt")
    sidecar = data / f"{name}_corrections.json"
    if sidecar.is_file():
        tl.corrections = parse_corrections(sidecar.read_text(), source=sidecar.name)
    return tl
