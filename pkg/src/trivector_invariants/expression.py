"""Trivector expressions and JSON documents.

Grammar (whitespace is ignored)::

    expr  := '0' | ['+'|'-'] term (('+'|'-') term)*
    term  := [rational '*'] basis '^' basis '^' basis
    basis := v1..v6 | e1..e3 | f1..f3          (e_i = v_i, f_i = v_{i+3})

A document maps 3-digit sorted triple keys to rational strings, e.g.
``{"123": "1", "456": "2"}``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .exterior import TRIPLES, Multivector, code, decode, wedge
from .scalar import format_rational, parse_rational


class ExpressionSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class UnknownBasisSymbol(ExpressionSyntaxError):
    pass


class DocumentError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<sym>[A-Za-z_]\w*)|(?P<op>[-+*^]))")
_BASIS = {**{f"v{i}": i for i in range(1, 7)},
          **{f"e{i}": i for i in range(1, 4)},
          **{f"f{i}": i + 3 for i in range(1, 4)}}


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ExpressionSyntaxError(f"unexpected character {text[start]!r}", start, text)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def parse_trivector(text: str) -> Multivector:
    toks = _tokens(text)
    if [t[:2] for t in toks] == [("num", "0"), ("end", "")]:
        return Multivector(3)
    i = 0
    total = Multivector(3)

    def expect_basis():
        nonlocal i
        kind, value, pos = toks[i]
        if kind != "sym":
            raise ExpressionSyntaxError(f"expected a basis symbol, got {value or 'end of input'!r}", pos, text)
        if value not in _BASIS:
            raise UnknownBasisSymbol(f"unknown basis symbol {value!r}", pos, text)
        i += 1
        return _BASIS[value]

    first = True
    while True:
        kind, value, pos = toks[i]
        sign = 1
        if kind == "op" and value in "+-":
            sign = -1 if value == "-" else 1
            i += 1
        elif not first:
            raise ExpressionSyntaxError(f"expected '+' or '-', got {value!r}", pos, text)
        elif kind == "end":
            raise ExpressionSyntaxError("empty expression", pos, text)
        first = False
        coeff = Fraction(1)
        kind, value, pos = toks[i]
        if kind == "num":
            try:
                coeff = parse_rational(value)
            except ZeroDivisionError:
                raise ExpressionSyntaxError("zero denominator", pos, text) from None
            i += 1
            kind, value, pos = toks[i]
            if not (kind == "op" and value == "*"):
                raise ExpressionSyntaxError("expected '*' after coefficient", pos, text)
            i += 1
        idx = [expect_basis()]
        for _ in range(2):
            kind, value, pos = toks[i]
            if not (kind == "op" and value == "^"):
                raise ExpressionSyntaxError("expected '^'", pos, text)
            i += 1
            idx.append(expect_basis())
        term = wedge(wedge(Multivector.basis_form(idx[0]), Multivector.basis_form(idx[1])),
                     Multivector.basis_form(idx[2]))
        total = total + term * (sign * coeff)
        if toks[i][0] == "end":
            return total


def format_trivector(theta: Multivector) -> str:
    """Canonical expression in ``v`` symbols; ``0`` for the zero trivector."""
    parts = []
    for t, c in theta.items():
        mono = "^".join(f"v{k}" for k in t)
        mag = abs(c)
        body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, body in parts[1:]:
        text += f" {s} {body}"
    return text


def to_document(theta: Multivector) -> dict[str, str]:
    return {str(code(t)): format_rational(c) for t, c in theta.items()}


def from_document(doc) -> Multivector:
    if not isinstance(doc, dict):
        raise DocumentError("a trivector document must be a JSON object")
    coeffs = {}
    for key, value in doc.items():
        try:
            t = decode(key)
        except ValueError as exc:
            raise DocumentError(str(exc)) from None
        if len(t) != 3:
            raise DocumentError(f"key {key!r} is not a triple")
        try:
            coeffs[t] = parse_rational(str(value))
        except (ValueError, ZeroDivisionError):
            raise DocumentError(f"value {value!r} for {key} is not a rational") from None
    return Multivector(3, [coeffs.get(t, Fraction(0)) for t in TRIPLES])


def dumps_document(theta: Multivector) -> str:
    return json.dumps(to_document(theta), sort_keys=True)


def loads_document(text: str) -> Multivector:
    try:
        return from_document(json.loads(text))
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc.msg} (line {exc.lineno})") from None
