import json

import pytest
from hypothesis import given, settings, strategies as st

from kcs import serialize as ser
from kcs.errors import CurvatureError, ScriptError
from kcs.exact_poly import Ideal, radical_member
from kcs.script import (RunOptions, execute, parse, print_script, render_text, verify_report)
from kcs.script.ast import BinOp, Neg, Num, Pow, Var, print_expr
from kcs.script.parser import Parser

FOUR = "ring R = QQ[x]; koszul E = koszul(R; x); curved P = bgg(E, E); supp(P);"

FULL = """\
ring R = QQ[x, y];
ring C = QQ[];
koszul E = koszul(R; x);
koszul F = koszul(R; x^2, 0);
koszul K0 = koszul(C; 0, 0);
dgmod k = residue(K0);
dgmod M = cone(E, x - 1);
dgmod N = shift(M);
dgmod S = sum(M, N);
dgmod D = explicit(K0; [0]; [[0]]; [[0]], [[0]]);
dgmod I = induced(E; [1, 0]; [[0, 0], [y, 0]]);
dgmod G = conjugate(E; [[1, 0], [0, 1]]; [[1, 0], [0, 1]]);
dgmod EA = algebra(F);
curved P = bgg(E, E);
curved Q = tensor(P, P);
curved Pd = dual(P);
curved Ps = shift(P);
curved Pp = sum(P, Ps);
morph a = scalar(P, chi1);
morph one = id(P);
curved Z = cone(one);
koszul K1 = koszul(R; 1);
curved MF = mf(K1; [[1]]; [[1]]);
curved W = square(E; [x]; [y*chi1]);
curved Cut = koszul_cut(P; x, chi1);
curved X = explicit(E; x*chi1; [0, 1]; [[0, x], [chi1, 0]]);
curved U = unit(E);
supp(P);
supp_point(P, (x, y, chi1));
thick(Cut in P);
supp_total(E);
nilpotent(a, P, 2);
nilpotent(a);
vsupp(E, E);
cx(k, k);
zero(Z);
generator(P);
"""


def test_four_statement_example():
    script = parse(FOUR)
    assert len(script) == 4
    assert [st.category for st in script.statements] == ["ring", "koszul", "curved", "query"]


def test_unknown_name_diagnostic():
    with pytest.raises(ScriptError) as info:
        parse("supp(Q);")
    assert "unknown name Q" in str(info.value)
    assert (info.value.line, info.value.column) == (1, 6)


def test_missing_semicolon_at_end_of_line():
    text = "ring R = QQ[x]; koszul E = koszul(R; x);\ncurved P = bgg(E, E)"
    with pytest.raises(ScriptError) as info:
        parse(text)
    assert info.value.line == 2
    assert info.value.column == len("curved P = bgg(E, E)") + 1
    assert ";" in info.value.expected


@pytest.mark.parametrize("text, fragment", [
    ("ring R = QQ[x]; koszul E = koszul(R; x); curved P = bgg(E);", "arity mismatch"),
    ("ring R = QQ[x]; supp(R);", "expected a curved module"),
    ("ring R = QQ[x]; ring R = QQ[y];", "already declared"),
    ("ring R = QQ[x]; curved P = frob(R);", "unknown curved constructor"),
    ("foo(x);", "unknown statement"),
    ("ring R = QQ[x; ", "expected"),
    ("ring R = QQ[x]; koszul E = koszul(R; x); curved P = bgg(E, E); thick(P, P);",
     "thick(Q in P)"),
    ("ring R = QQ[x] $", "unexpected character"),
])
def test_static_errors(text, fragment):
    with pytest.raises(ScriptError) as info:
        parse(text)
    assert fragment in str(info.value)
    assert info.value.line is not None


def test_full_grammar_parses_and_prints_canonically():
    script = parse(FULL)
    printed = print_script(script)
    assert printed == FULL
    assert parse(printed) == script


def test_print_parse_is_idempotent_on_messy_input():
    messy = "ring R=QQ[x,chi:-2];# comment\ncurved P=explicit(R;x*chi;[0,1];[[0,x],[chi,0]]);" \
            "supp_point(P,x);"
    once = print_script(parse(messy))
    assert print_script(parse(once)) == once
    assert "supp_point(P, (x));" in once


# expressions: parse . print = identity on canonical trees

def expr_strategy():
    leaves = st.one_of(st.integers(0, 20).map(Num), st.sampled_from(["x", "y", "chi1"]).map(Var))
    return st.recursive(leaves, lambda sub: st.one_of(
        st.tuples(st.sampled_from("+-*/"), sub, sub).map(lambda t: BinOp(*t)),
        sub.map(Neg),
        st.tuples(sub, st.integers(0, 3)).map(lambda t: Pow(*t)),
    ), max_leaves=8)


@settings(max_examples=200, deadline=None)
@given(expr_strategy())
def test_expression_printer_round_trips(e):
    text = print_expr(e)
    parsed = Parser(text).expr()
    assert parsed == e


# execution

def test_four_statement_report():
    report = execute(FOUR)
    assert report["version"] == "kcs-1"
    (res,) = report["results"]
    assert res["query"] == "supp"
    cert = ser.certificate_from_dict(res["certificate"])
    A = cert.subject.ring
    x, chi = A.gens()
    ann = cert.annihilator
    target = Ideal(A, [x, chi])
    assert all(radical_member(g, ann) for g in target.generators)
    assert all(radical_member(g, target) for g in ann.generators)


def test_full_script_results():
    report = execute(FULL, RunOptions(verify=True))
    values = {r["text"]: r["value"] for r in report["results"]}
    assert values["supp_point(P, (x, y, chi1));"] is True
    assert values["thick(Cut in P);"] is True
    assert values["nilpotent(a, P, 2);"] == 1
    assert values["cx(k, k);"] == 2
    assert values["zero(Z);"] is True
    assert values["generator(P);"] is True
    assert all(r.get("verified", True) for r in report["results"])
    assert verify_report(report)
    assert "V(x, chi1)" in render_text(report)


def test_execution_is_deterministic():
    a = json.dumps(execute(FULL), sort_keys=True)
    b = json.dumps(execute(FULL), sort_keys=True)
    assert a == b


def test_empty_script():
    assert execute("") == {"version": "kcs-1", "results": []}


def test_invalid_module_aborts_with_position():
    text = "ring R = QQ[x, chi:-2];\ncurved P = explicit(R; x^2*chi; [0, 1]; [[0, x], [chi, 0]]);"
    with pytest.raises(CurvatureError) as info:
        execute(text)
    assert info.value.line == 2


def test_unknown_variable_at_runtime():
    with pytest.raises(ScriptError) as info:
        execute("ring R = QQ[x]; koszul E = koszul(R; y);")
    assert "unknown variable y" in str(info.value)


def test_order_option():
    report = execute("ring R = QQ[x]; koszul E = koszul(R; x); curved P = bgg(E, E); supp(P);",
                     RunOptions(order="lex"))
    assert report["results"][0]["certificate"]["subject"]["ring"]["order"] == "lex"
