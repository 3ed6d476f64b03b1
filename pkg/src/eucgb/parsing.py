"""Text grammar for polynomials and polynomial vectors, and canonical printing.

Grammar::

    vector     := '(' polynomial (',' polynomial)* ')'
    polynomial := term (('+' | '-') term)*
    term       := [sign] coeff ('*' var-power)* | [sign] var-power ('*' var-power)*
    var-power  := name ['^' positive-int]

Coefficients are decimal integers, or ``p/q`` over the rationals.
"""
from __future__ import annotations

import re

from .polyvec import AdmissibleOrder, PolyRing, PolyVector, lex_order


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0, line: int = 1):
        self.message = message
        self.line = line
        self.col = pos + 1
        self.text = text
        super().__init__(f"line {line}, column {self.col}: {message}")

    def at_line(self, line: int) -> "ParseError":
        return ParseError(self.message, self.text, self.col - 1, line)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^(),]))")


def _tokenize(text: str):
    pos = 0
    out = []
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0
        self.varindex = {v: j for j, v in enumerate(ring.variables)}

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.text, tok[2])

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise self.error(f"expected {value!r}, found {found}", tok)
        return tok

    def coefficient(self, tok):
        try:
            return self.ring.domain.parse(tok[1])
        except (ValueError, ZeroDivisionError):
            raise self.error(f"invalid {self.ring.domain.name} coefficient {tok[1]!r}", tok) from None

    def var_power(self, alpha):
        tok = self.take()
        if tok[0] != "name":
            raise self.error("expected a variable", tok)
        j = self.varindex.get(tok[1])
        if j is None:
            raise self.error(f"unknown variable {tok[1]!r} (ring has {', '.join(self.ring.variables)})", tok)
        e = 1
        if self.peek()[1] == "^":
            self.take()
            etok = self.take()
            if etok[0] != "num" or "/" in etok[1] or int(etok[1]) < 1:
                raise self.error("exponent must be a positive integer", etok)
            e = int(etok[1])
        alpha[j] += e

    def term(self, sign):
        alpha = [0] * self.ring.nvars
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            coeff = self.coefficient(tok)
            while self.peek()[1] == "*":
                self.take()
                self.var_power(alpha)
        elif tok[0] == "name":
            coeff = self.ring.domain.one
            self.var_power(alpha)
            while self.peek()[1] == "*":
                self.take()
                self.var_power(alpha)
        else:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise self.error(f"expected a term, found {found}", tok)
        return (sign * coeff, (tuple(alpha), 0))

    def polynomial(self):
        terms = []
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        terms.append(self.term(sign))
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
            terms.append(self.term(sign))
        return PolyVector.from_terms(self.ring, 1, terms)

    def vector(self):
        self.expect("(")
        entries = [self.polynomial()]
        while self.peek()[1] == ",":
            self.take()
            entries.append(self.polynomial())
        self.expect(")")
        return PolyVector.from_entries(self.ring, entries)

    def finish(self):
        tok = self.peek()
        if tok[0] != "end":
            raise self.error(f"unexpected {tok[1]!r}", tok)


def parse_polynomial(text: str, ring: PolyRing) -> PolyVector:
    p = _Parser(text, ring)
    out = p.polynomial()
    p.finish()
    return out


def parse_vector(text: str, ring: PolyRing) -> PolyVector:
    p = _Parser(text, ring)
    out = p.vector()
    p.finish()
    return out


def parse_element(text: str, ring: PolyRing) -> PolyVector:
    """A vector if ``text`` starts with ``(``, otherwise a polynomial."""
    if text.lstrip().startswith("("):
        return parse_vector(text, ring)
    return parse_polynomial(text, ring)


def _format_term(ring: PolyRing, c, alpha) -> str:
    factors = [v if e == 1 else f"{v}^{e}" for v, e in zip(ring.variables, alpha) if e]
    cs = ring.domain.format(c)
    if not factors:
        return cs
    mono = "*".join(factors)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{cs}*{mono}"


def _join(parts: list[str]) -> str:
    if not parts:
        return "0"
    out = parts[0]
    for t in parts[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


def format_polynomial(p: PolyVector, order: AdmissibleOrder | None = None, comp: int = 0) -> str:
    """Canonical text of component ``comp`` with terms in decreasing order."""
    order = order or lex_order()
    items = [(a, c) for (a, i), c in p.terms.items() if i == comp]
    items.sort(key=lambda ac: order.key((ac[0], comp)), reverse=True)
    return _join([_format_term(p.ring, c, a) for a, c in items])


def format_vector(v: PolyVector, order: AdmissibleOrder | None = None) -> str:
    return "(" + ", ".join(format_polynomial(v, order, j) for j in range(v.rank)) + ")"


def format_element(v: PolyVector, order: AdmissibleOrder | None = None) -> str:
    return format_polynomial(v, order) if v.rank == 1 else format_vector(v, order)
