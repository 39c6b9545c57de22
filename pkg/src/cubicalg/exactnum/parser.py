"""Expression parser producing PolyFraction values.

Grammar:

    expr    = ["+" | "-"] term { ("+" | "-") term }
    term    = factor { ("*" | "/") factor }
    factor  = base [ "^" uint ]
    base    = uint | symbol | "(" expr ")"

Numbers are unsigned integers; rationals arise through "/".  Symbol
names come from the table.  Division is exact fraction arithmetic, so a
divisor must reduce to a rational times a product of the table's
denominator atoms.  The printers on MultiPoly and PolyFraction emit
strings this grammar accepts, and parsing such output reproduces the
original value.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ExactDivisionError, ParseError
from .multipoly import MultiPoly
from .polyfraction import PolyFraction

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([()^*/+-]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError("unexpected character %r" % text[pos:].lstrip()[0],
                             len(text) - len(stripped))
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, table):
        self.text = text
        self.table = table
        self.tokens = _tokenize(text)
        self.cursor = 0

    def peek(self):
        return self.tokens[self.cursor]

    def advance(self):
        tok = self.tokens[self.cursor]
        self.cursor += 1
        return tok

    def expect_op(self, symbol):
        kind, value, pos = self.peek()
        if kind != "op" or value != symbol:
            raise ParseError("expected %r" % symbol, pos)
        return self.advance()

    def parse(self):
        value = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise ParseError("trailing input", pos)
        return value

    def expr(self):
        kind, value, _ = self.peek()
        negate = False
        if kind == "op" and value in "+-":
            negate = value == "-"
            self.advance()
        total = self.term()
        if negate:
            total = -total
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                rhs = self.term()
                total = total - rhs if value == "-" else total + rhs
            else:
                return total

    def term(self):
        total = self.factor()
        while True:
            kind, value, pos = self.peek()
            if kind == "op" and value in "*/":
                self.advance()
                rhs = self.factor()
                if value == "*":
                    total = total * rhs
                else:
                    try:
                        total = total / rhs
                    except (ExactDivisionError, ZeroDivisionError) as exc:
                        raise ParseError(str(exc), pos) from None
            else:
                return total

    def factor(self):
        base = self.base()
        kind, value, pos = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            kind, value, pos = self.peek()
            if kind != "int":
                raise ParseError("exponent must be an unsigned integer", pos)
            self.advance()
            base = base ** int(value)
        return base

    def base(self):
        kind, value, pos = self.advance()
        if kind == "int":
            return PolyFraction.const(self.table, Fraction(int(value)))
        if kind == "name":
            if value not in self.table.symbols:
                raise ParseError("unknown symbol %r" % value, pos)
            return PolyFraction(MultiPoly.sym(self.table, value))
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError("expected a number, symbol, or parenthesis", pos)


def parse(text, table):
    """Parse expression text into a PolyFraction over the table."""
    return _Parser(text, table).parse()
