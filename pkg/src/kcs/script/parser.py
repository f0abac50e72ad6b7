"""Tokenizer, recursive-descent parser and static checker for kcs scripts.

Grammar (whitespace and ``#`` comments ignored)::

    script    := statement*
    statement := "ring" NAME "=" "QQ" "[" [var ("," var)*] "]" ";"
               | CATEGORY NAME "=" OP "(" args ")" ";"
               | QUERY "(" args ")" ";"
    var       := IDENT [":" ["-"] INT]
    args      := [item (SEP item)*]        SEP is "," or ";" (or "in" for thick)
    item      := "[" [item ("," item)*] "]" | expr
    expr      := term (("+" | "-") term)*
    term      := unary (("*" | "/") unary)*
    unary     := "-" unary | power
    power     := atom ["^" INT]
    atom      := INT | IDENT | "(" expr ("," expr)* ")"

After parsing, every call is checked against ``SIGNATURES``: names must be
declared earlier and of the right kind, and the argument count must match.
"""

import re

from ..errors import ScriptError
from .ast import (DECLARATIONS, SIGNATURES, BinOp, Neg, Num, Pow, Script, Statement, Var)

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+) | (?P<nl>\n) | (?P<comment>\#[^\n]*)
  | (?P<int>\d+) | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[()\[\],;=+\-*/^:])
""", re.VERBOSE)


class Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind, self.text, self.line, self.col = kind, text, line, col

    @property
    def pos(self):
        return (self.line, self.col)

    def describe(self):
        return "end of input" if self.kind == "eof" else repr(self.text)


def tokenize(text):
    tokens = []
    line, col, i = 1, 1, 0
    end = (1, 1)
    while i < len(text):
        m = _TOKEN.match(text, i)
        if m is None:
            raise ScriptError(f"unexpected character {text[i]!r}", line, col)
        kind, s = m.lastgroup, m.group()
        if kind == "nl":
            line, col = line + 1, 1
        else:
            if kind in ("int", "ident", "punct"):
                tokens.append(Token(kind, s, line, col))
                end = (line, col + len(s))
            col += len(s)
        i = m.end()
    # the end token sits right after the last real token, so a missing ';'
    # is reported at the end of the line it belongs to
    tokens.append(Token("eof", "", *end))
    return tokens


class _ListItem:
    def __init__(self, elements, pos):
        self.elements, self.pos = elements, pos


class _Tuple:
    def __init__(self, elements, pos):
        self.elements, self.pos = elements, pos


_QUERIES = sorted(op for cat, op in SIGNATURES if cat == "query")


def _ops(category):
    return sorted(op for cat, op in SIGNATURES if cat == category)


_COMPATIBLE = {
    "ring": {"ring"}, "koszul": {"koszul"}, "dgmod": {"dgmod", "koszul"},
    "curved": {"curved"}, "morph": {"morph"}, "aring": {"ring", "koszul"},
    "wsource": {"koszul", "curved"},
}

_KIND_WORDS = {
    "ring": "a ring", "koszul": "a koszul complex", "dgmod": "a dg module",
    "curved": "a curved module", "morph": "a morphism", "aring": "a ring or koszul complex",
    "wsource": "a koszul complex or curved module",
}


class Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.i = 0
        self.symbols = {}

    # token helpers

    @property
    def tok(self):
        return self.tokens[self.i]

    def error(self, message, expected=None, tok=None):
        tok = tok or self.tok
        raise ScriptError(message, tok.line, tok.col, expected)

    def at(self, text):
        return self.tok.kind in ("punct", "ident") and self.tok.text == text

    def expect(self, text):
        if not self.at(text):
            self.error(f"expected {text!r}, found {self.tok.describe()}", {text})
        t = self.tok
        self.i += 1
        return t

    def expect_kind(self, kind, what):
        if self.tok.kind != kind:
            self.error(f"expected {what}, found {self.tok.describe()}", {what})
        t = self.tok
        self.i += 1
        return t

    # statements

    def parse(self):
        out = []
        while self.tok.kind != "eof":
            out.append(self.statement())
        return Script(tuple(out))

    def statement(self):
        t = self.expect_kind("ident", "statement")
        if t.text == "ring":
            return self.ring_statement(t)
        if t.text in DECLARATIONS:
            name = self.expect_kind("ident", "name")
            if name.text in self.symbols:
                self.error(f"name {name.text} is already declared", tok=name)
            self.expect("=")
            op = self.expect_kind("ident", "constructor")
            if (t.text, op.text) not in SIGNATURES:
                self.error(f"unknown {t.text} constructor {op.text}", set(_ops(t.text)), op)
            items, seps = self.call()
            self.expect(";")
            args = self.check(t.text, op, items, seps)
            self.symbols[name.text] = t.text
            return Statement(t.text, op.text, name.text, args, t.pos)
        if t.text not in _QUERIES:
            self.error(f"unknown statement {t.text}",
                       set(DECLARATIONS) | set(_QUERIES), t)
        items, seps = self.call()
        self.expect(";")
        return Statement("query", t.text, None, self.check("query", t, items, seps), t.pos)

    def ring_statement(self, t):
        name = self.expect_kind("ident", "name")
        if name.text in self.symbols:
            self.error(f"name {name.text} is already declared", tok=name)
        self.expect("=")
        self.expect("QQ")
        self.expect("[")
        variables = []
        if not self.at("]"):
            while True:
                v = self.expect_kind("ident", "variable name")
                deg = 0
                if self.at(":"):
                    self.i += 1
                    sign = -1 if self.at("-") else 1
                    if sign < 0:
                        self.i += 1
                    deg = sign * int(self.expect_kind("int", "degree").text)
                variables.append((v.text, deg))
                if not self.at(","):
                    break
                self.i += 1
        self.expect("]")
        self.expect(";")
        self.symbols[name.text] = "ring"
        return Statement("ring", "QQ", name.text, (tuple(variables),), t.pos)

    def call(self):
        self.expect("(")
        items, seps = [], []
        if not self.at(")"):
            items.append(self.item())
            while self.at(",") or self.at(";") or self.at("in"):
                seps.append(self.tok.text)
                self.i += 1
                items.append(self.item())
        if not self.at(")"):
            self.error(f"expected ')', found {self.tok.describe()}", {")", ",", ";"})
        self.i += 1
        return items, seps

    def item(self):
        if self.at("["):
            t = self.expect("[")
            elements = []
            if not self.at("]"):
                elements.append(self.item())
                while self.at(","):
                    self.i += 1
                    elements.append(self.item())
            self.expect("]")
            return _ListItem(elements, t.pos)
        return self.expr()

    # expressions

    def expr(self):
        left = self.term()
        while self.at("+") or self.at("-"):
            t = self.tok
            self.i += 1
            left = BinOp(t.text, left, self.term(), t.pos)
        return left

    def term(self):
        left = self.unary()
        while self.at("*") or self.at("/"):
            t = self.tok
            self.i += 1
            left = BinOp(t.text, left, self.unary(), t.pos)
        return left

    def unary(self):
        if self.at("-"):
            t = self.tok
            self.i += 1
            return Neg(self.unary(), t.pos)
        return self.power()

    def power(self):
        base = self.atom()
        if self.at("^"):
            t = self.tok
            self.i += 1
            base = Pow(base, int(self.expect_kind("int", "exponent").text), t.pos)
        return base

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.i += 1
            return Num(int(t.text), t.pos)
        if t.kind == "ident":
            self.i += 1
            return Var(t.text, t.pos)
        if self.at("("):
            self.i += 1
            elements = [self.expr()]
            while self.at(","):
                self.i += 1
                elements.append(self.expr())
            self.expect(")")
            return elements[0] if len(elements) == 1 else _Tuple(elements, t.pos)
        self.error(f"expected an expression, found {t.describe()}",
                   {"number", "identifier", "("})

    # static checks

    def check(self, category, op_tok, items, seps):
        op = op_tok.text
        params = SIGNATURES[(category, op)]
        if op == "thick" and category == "query":
            if seps != ["in"]:
                self.error("thick expects the form thick(Q in P)", {"in"}, op_tok)
        elif "in" in seps:
            self.error(f"'in' is only allowed in thick", expected={",", ";"}, tok=op_tok)
        required = sum(1 for k, _ in params if not k.endswith(("?", "*")))
        variadic = any(k.endswith("*") for k, _ in params)
        maximum = None if variadic else len(params)
        if len(items) < required or (maximum is not None and len(items) > maximum):
            want = f"{required}" if maximum in (None, required) else f"{required} to {maximum}"
            if maximum is None:
                want = f"at least {required}"
            self.error(f"arity mismatch: {op} takes {want} arguments, got {len(items)}",
                       tok=op_tok)
        out, i = [], 0
        for kind, _ in params:
            base = kind.rstrip("?*")
            if kind.endswith("*"):
                out.append(tuple(self.convert(base, it) for it in items[i:]))
                i = len(items)
            elif kind.endswith("?"):
                if i < len(items) and self.fits(base, items[i]):
                    out.append(self.convert(base, items[i]))
                    i += 1
                else:
                    out.append(None)
            else:
                if i >= len(items):
                    self.error(f"arity mismatch: {op} is missing its {base} argument", tok=op_tok)
                out.append(self.convert(base, items[i]))
                i += 1
        if i < len(items):
            self.error(f"arity mismatch: {op} got {len(items)} arguments", tok=op_tok)
        return tuple(out)

    def fits(self, kind, item):
        if kind == "int":
            return _as_int(item) is not None
        return isinstance(item, Var) and self.symbols.get(item.name) in _COMPATIBLE[kind]

    def fail_at(self, item, message, expected=None):
        line, col = item.pos
        raise ScriptError(message, line, col, expected)

    def convert(self, kind, item):
        if kind in _COMPATIBLE:
            if not isinstance(item, Var):
                self.fail_at(item, f"expected {_KIND_WORDS[kind]} name")
            known = self.symbols.get(item.name)
            if known is None:
                self.fail_at(item, f"unknown name {item.name}")
            if known not in _COMPATIBLE[kind]:
                self.fail_at(item, f"{item.name} is {_KIND_WORDS[known]}, expected "
                             f"{_KIND_WORDS[kind]}")
            return item.name
        if kind == "poly":
            return self.poly(item)
        if kind == "int":
            v = _as_int(item)
            if v is None:
                self.fail_at(item, "expected an integer")
            return v
        if kind == "tuple":
            if isinstance(item, _Tuple):
                return tuple(self.poly(e) for e in item.elements)
            return (self.poly(item),)
        if not isinstance(item, _ListItem):
            self.fail_at(item, "expected a [...] list", {"["})
        if kind == "ints":
            return tuple(self.convert("int", e) for e in item.elements)
        if kind == "polylist":
            return tuple(self.poly(e) for e in item.elements)
        if kind == "matrix":
            rows = []
            for row in item.elements:
                if not isinstance(row, _ListItem):
                    self.fail_at(row, "expected a matrix row [...]", {"["})
                rows.append(tuple(self.poly(e) for e in row.elements))
            return tuple(rows)
        raise AssertionError(kind)

    def poly(self, e):
        if isinstance(e, (_ListItem, _Tuple)):
            self.fail_at(e, "expected a polynomial")
        for sub in _subexpressions(e):
            if isinstance(sub, (_ListItem, _Tuple)):
                self.fail_at(sub, "a tuple cannot appear inside an expression")
        return e


def _subexpressions(e):
    yield e
    if isinstance(e, BinOp):
        yield from _subexpressions(e.left)
        yield from _subexpressions(e.right)
    elif isinstance(e, Neg):
        yield from _subexpressions(e.arg)
    elif isinstance(e, Pow):
        yield from _subexpressions(e.base)


def _as_int(item):
    if isinstance(item, Num):
        return item.value
    if isinstance(item, Neg) and isinstance(item.arg, Num):
        return -item.arg.value
    return None


def parse(text):
    """Parse and statically check a script; raises ScriptError with a position."""
    return Parser(text).parse()
