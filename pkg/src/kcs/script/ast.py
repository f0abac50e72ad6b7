"""Syntax tree of kcs scripts and the canonical printer.

Statements hold typed arguments (after name resolution), so printing and
re-parsing a script gives back an equal tree.  Positions are kept for
diagnostics but ignored by equality.
"""

from dataclasses import dataclass, field


# polynomial expressions

@dataclass(frozen=True)
class Num:
    value: int
    pos: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class Var:
    name: str
    pos: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class Neg:
    arg: object
    pos: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str          # one of + - * /
    left: object
    right: object
    pos: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int
    pos: tuple = field(default=None, compare=False)


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}
_NEG, _POW, _ATOM = 3, 4, 5


def _prec(e):
    if isinstance(e, BinOp):
        return _PREC[e.op]
    if isinstance(e, Neg):
        return _NEG
    if isinstance(e, Pow):
        return _POW
    return _ATOM


def _wrap(e, need):
    s = print_expr(e)
    return f"({s})" if _prec(e) < need else s


def print_expr(e):
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Neg):
        return "-" + _wrap(e.arg, _NEG)
    if isinstance(e, Pow):
        return f"{_wrap(e.base, _ATOM)}^{e.exponent}"
    p = _PREC[e.op]
    sep = f" {e.op} " if p == 1 else e.op
    # left-associative: the right operand needs strictly higher precedence
    return _wrap(e.left, p) + sep + _wrap(e.right, p + 1)


# statements

@dataclass(frozen=True)
class Statement:
    """``category`` is ring/koszul/dgmod/curved/morph for declarations, query otherwise."""

    category: str
    op: str
    name: object                 # declared name, None for queries
    args: tuple                  # typed values, see SIGNATURES
    pos: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class Script:
    statements: tuple

    def __len__(self):
        return len(self.statements)


# (kind, separator printed before it).  Kinds:
#   ring koszul dgmod curved morph   a declared name of that kind
#   aring       a ring, or a koszul name standing for its ring R[chi]
#   wsource     a koszul or curved name (supplies a ring and a curvature)
#   poly        expression;  poly*  the remaining arguments, all polynomials
#   int ints polylist matrix tuple;  matrix*  remaining arguments, all matrices
#   a trailing ? marks an optional argument
SIGNATURES = {
    ("koszul", "koszul"): (("ring", ""), ("poly*", "; ")),
    ("dgmod", "residue"): (("koszul", ""),),
    ("dgmod", "algebra"): (("koszul", ""),),
    ("dgmod", "cone"): (("dgmod", ""), ("poly", ", ")),
    ("dgmod", "shift"): (("dgmod", ""),),
    ("dgmod", "sum"): (("dgmod", ""), ("dgmod", ", ")),
    ("dgmod", "explicit"): (("koszul", ""), ("ints", "; "), ("matrix", "; "), ("matrix*", "; ")),
    ("dgmod", "induced"): (("koszul", ""), ("ints", "; "), ("matrix", "; ")),
    ("dgmod", "conjugate"): (("dgmod", ""), ("matrix", "; "), ("matrix", "; ")),
    ("curved", "bgg"): (("koszul", ""), ("dgmod", ", ")),
    ("curved", "tensor"): (("curved", ""), ("curved", ", ")),
    ("curved", "dual"): (("curved", ""),),
    ("curved", "shift"): (("curved", ""),),
    ("curved", "sum"): (("curved", ""), ("curved", ", ")),
    ("curved", "cone"): (("morph", ""),),
    ("curved", "mf"): (("koszul", ""), ("matrix", "; "), ("matrix", "; ")),
    ("curved", "square"): (("aring", ""), ("polylist", "; "), ("polylist", "; ")),
    ("curved", "koszul_cut"): (("curved", ""), ("poly*", "; ")),
    ("curved", "explicit"): (("aring", ""), ("poly", "; "), ("ints", "; "), ("matrix", "; ")),
    ("curved", "unit"): (("aring", ""),),
    ("morph", "id"): (("curved", ""),),
    ("morph", "scalar"): (("curved", ""), ("poly", ", ")),
    ("query", "supp"): (("curved", ""),),
    ("query", "supp_point"): (("curved", ""), ("tuple", ", ")),
    ("query", "thick"): (("curved", ""), ("curved", " in ")),
    ("query", "supp_total"): (("wsource", ""),),
    ("query", "nilpotent"): (("morph", ""), ("curved?", ", "), ("int?", ", ")),
    ("query", "vsupp"): (("dgmod", ""), ("dgmod", ", ")),
    ("query", "cx"): (("dgmod", ""), ("dgmod", ", ")),
    ("query", "zero"): (("curved", ""),),
    ("query", "generator"): (("curved", ""),),
}

DECLARATIONS = ("ring", "koszul", "dgmod", "curved", "morph")


def _print_value(kind, value):
    kind = kind.rstrip("?*")
    if kind in ("poly",):
        return print_expr(value)
    if kind == "int":
        return str(value)
    if kind == "ints":
        return "[" + ", ".join(str(v) for v in value) + "]"
    if kind == "polylist":
        return "[" + ", ".join(print_expr(v) for v in value) + "]"
    if kind == "tuple":
        return "(" + ", ".join(print_expr(v) for v in value) + ")"
    if kind == "matrix":
        return "[" + ", ".join("[" + ", ".join(print_expr(x) for x in row) + "]"
                               for row in value) + "]"
    return value      # a name


def print_statement(st):
    if st.category == "ring":
        inner = ", ".join(n if d == 0 else f"{n}:{d}" for n, d in st.args[0])
        return f"ring {st.name} = QQ[{inner}];"
    parts = []
    for (kind, sep), value in zip(SIGNATURES[(st.category, st.op)], st.args):
        if value is None:
            continue
        if kind.endswith("*"):
            if value:
                parts.append(sep + ", ".join(_print_value(kind, v) for v in value))
        else:
            parts.append((sep if parts else "") + _print_value(kind, value))
    call = f"{st.op}({''.join(parts)})"
    if st.category == "query":
        return call + ";"
    return f"{st.category} {st.name} = {call};"


def print_script(script):
    return "".join(print_statement(st) + "\n" for st in script.statements)
