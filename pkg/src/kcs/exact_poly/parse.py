"""Text form of polynomials: ``3/2*x^2*chi - x + 1``.

The reader accepts the usual infix grammar (``+ - * / ^`` and parentheses);
division is allowed only by nonzero rational constants.
"""

import re
from fractions import Fraction

from ..errors import ValidationError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokens(text):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", num, m.start(1)))
        elif name is not None:
            out.append(("name", name, m.start(2)))
        else:
            out.append(("op", op, m.start(3)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Reader:
    def __init__(self, ring, text):
        self.ring = ring
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg):
        raise ValidationError(f"cannot parse polynomial {self.text!r}: {msg} "
                              f"at offset {self.peek()[2]}")

    def expr(self):
        sign = 1
        if self.peek()[:2] in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        value = self.term() * sign
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.power()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.power()
            if op == "*":
                value = value * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    self.fail("division by a non-constant or zero")
                value = value * (1 / rhs.constant_value())
        return value

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, tok, _ = self.take()
            if kind != "num":
                self.fail("exponent must be a nonnegative integer")
            base = base ** int(tok)
        return base

    def atom(self):
        kind, tok, _ = self.peek()
        if kind == "num":
            self.take()
            return self.ring.const(Fraction(int(tok)))
        if kind == "name":
            self.take()
            if tok not in self.ring:
                self.fail(f"unknown variable {tok!r}")
            return self.ring.var(tok)
        if tok == "(":
            self.take()
            value = self.expr()
            if self.take()[1] != ")":
                self.fail("expected ')'")
            return value
        if tok == "-":
            self.take()
            return -self.atom()
        self.fail(f"unexpected {tok!r}" if tok else "unexpected end of input")


def parse_polynomial(ring, text):
    reader = _Reader(ring, text)
    if reader.peek()[0] == "end":
        reader.fail("empty input")
    value = reader.expr()
    if reader.peek()[0] != "end":
        reader.fail(f"unexpected {reader.peek()[1]!r}")
    return value


def parse_rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"bad rational {text!r}") from None
