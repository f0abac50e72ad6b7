"""Execute checked scripts and build JSON run reports."""

from dataclasses import dataclass
from fractions import Fraction

from .. import curved as cv
from .. import koszul as kz
from .. import serialize as ser
from .. import support as sp
from ..errors import KcsError, ScriptError, UnsupportedError, ValidationError
from ..exact_poly import GradedRing, Ideal, reset_step_limit, set_step_limit
from .ast import BinOp, Neg, Num, Pow, Var, print_statement
from .parser import parse


@dataclass
class RunOptions:
    order: str = "degrevlex"
    max_nilpotence: int = sp.DEFAULT_NILPOTENCE_CAP
    gb_step_limit: object = None
    verify: bool = False


def evaluate(expr, ring):
    """Value of a parsed expression in ``ring``; unknown variables are errors."""
    if isinstance(expr, Num):
        return ring.const(expr.value)
    if isinstance(expr, Var):
        if expr.name not in ring:
            line, col = expr.pos or (None, None)
            raise ScriptError(f"unknown variable {expr.name} in {ring!r}", line, col)
        return ring.var(expr.name)
    if isinstance(expr, Neg):
        return -evaluate(expr.arg, ring)
    if isinstance(expr, Pow):
        return evaluate(expr.base, ring) ** expr.exponent
    a, b = evaluate(expr.left, ring), evaluate(expr.right, ring)
    if expr.op == "+":
        return a + b
    if expr.op == "-":
        return a - b
    if expr.op == "*":
        return a * b
    if not b.is_constant() or not b:
        line, col = expr.pos or (None, None)
        raise ScriptError("division is only allowed by nonzero constants", line, col)
    return a * (1 / Fraction(b.constant_value()))


def _locus_json(V):
    return [ser.ideal_to_dict(c) for c in V.components]


def _locus_text(V):
    if not V.components:
        return "empty"
    return " u ".join(f"V{c!r}" for c in V.components)


class Runner:
    def __init__(self, options=None):
        self.options = options or RunOptions()
        self.env = {}

    # name resolution

    def ring_of(self, name):
        obj = self.env[name]
        return obj.ring if isinstance(obj, kz.KoszulData) else obj

    def dgmod(self, name):
        obj = self.env[name]
        if isinstance(obj, kz.KoszulData):
            return kz.koszul_algebra(obj)
        return obj

    def polys(self, exprs, ring):
        return [evaluate(e, ring) for e in exprs]

    def matrix(self, rows, ring):
        return [[evaluate(e, ring) for e in row] for row in rows]

    # statements

    def run(self, script):
        results = []
        token = set_step_limit(self.options.gb_step_limit)
        try:
            for index, st in enumerate(script.statements):
                try:
                    result = self.statement(st)
                except KcsError as exc:
                    if getattr(exc, "line", None) is None and st.pos:
                        exc.line, exc.column = st.pos
                    raise
                if result is not None:
                    result = {"statement": index, "line": st.pos[0] if st.pos else None,
                              "text": print_statement(st), **result}
                    if self.options.verify:
                        result["verified"] = replay(result)
                        if not result["verified"]:
                            raise KcsError(f"certificate of statement {index} failed to verify")
                    results.append(result)
        finally:
            reset_step_limit(token)
        return {"version": ser.VERSION, "results": results}

    def statement(self, st):
        if st.category == "query":
            return getattr(self, "q_" + st.op)(*st.args)
        if st.category == "ring":
            self.env[st.name] = GradedRing(st.args[0], self.options.order)
            return None
        self.env[st.name] = getattr(self, f"{st.category}_{st.op}")(*st.args)
        return None

    def koszul_koszul(self, ring, fs):
        R = self.env[ring]
        return kz.KoszulData(R, self.polys(fs, R))

    def dgmod_residue(self, k):
        return kz.residue_module(self.env[k])

    def dgmod_algebra(self, k):
        return kz.koszul_algebra(self.env[k])

    def dgmod_cone(self, m, r):
        M = self.dgmod(m)
        return kz.dg_cone_scalar(M, evaluate(r, M.koszul.base))

    def dgmod_shift(self, m):
        return kz.dg_shift(self.dgmod(m))

    def dgmod_sum(self, m, n):
        return kz.dg_direct_sum(self.dgmod(m), self.dgmod(n))

    def dgmod_explicit(self, k, degrees, d, ops):
        kd = self.env[k]
        R = kd.base
        return kz.dg_module(kd, degrees, self.matrix(d, R), [self.matrix(e, R) for e in ops])

    def dgmod_induced(self, k, degrees, d):
        kd = self.env[k]
        return kz.induced_module(kd, degrees, self.matrix(d, kd.base))

    def dgmod_conjugate(self, m, g, g_inv):
        M = self.dgmod(m)
        R = M.koszul.base
        return kz.conjugate(M, self.matrix(g, R), self.matrix(g_inv, R))

    def curved_bgg(self, k, m):
        M = self.dgmod(m)
        if M.koszul != self.env[k]:
            raise ValidationError(f"{m} is not a dg module over {k}")
        return kz.bgg(M)

    def curved_tensor(self, p, q):
        return cv.tensor(self.env[p], self.env[q])

    def curved_dual(self, p):
        return cv.dual(self.env[p])

    def curved_shift(self, p):
        return cv.shift(self.env[p])

    def curved_sum(self, p, q):
        return cv.direct_sum(self.env[p], self.env[q])

    def curved_cone(self, f):
        return cv.cone(self.env[f])

    def curved_mf(self, k, d0, d1):
        kd = self.env[k]
        if kd.n != 1:
            raise ValidationError("mf needs a koszul complex on a single element")
        R = kd.base
        return sp.mf_to_curved(kd, kd.f[0], self.matrix(d0, R), self.matrix(d1, R))

    def curved_square(self, r, a, b):
        A = self.ring_of(r)
        return sp.square_witness(self.polys(a, A), self.polys(b, A), ring=A)

    def curved_koszul_cut(self, p, xs):
        P = self.env[p]
        return sp.koszul_cut(self.polys(xs, P.ring), P)

    def curved_explicit(self, r, w, degrees, D):
        A = self.ring_of(r)
        return cv.make_curved(A, evaluate(w, A), degrees, self.matrix(D, A))

    def curved_unit(self, r):
        return cv.unit_object(self.ring_of(r))

    def morph_id(self, p):
        return self.env[p].identity()

    def morph_scalar(self, p, a):
        P = self.env[p]
        return P.scalar(evaluate(a, P.ring))

    # queries

    def q_supp(self, p):
        cert = sp.supp_global(self.env[p])
        return {"query": "supp", "value": _locus_json(cert.locus),
                "display": _locus_text(cert.locus),
                "certificate": ser.certificate_to_dict(cert)}

    def q_supp_point(self, p, gens):
        P = self.env[p]
        value = sp.supp_point(P, Ideal(P.ring, self.polys(gens, P.ring)))
        return {"query": "supp_point", "value": value}

    def q_thick(self, q, p):
        return {"query": "thick", "value": sp.thick_member(self.env[q], self.env[p])}

    def q_supp_total(self, src):
        obj = self.env[src]
        V = sp.supp_total(obj.ring, obj.curvature)
        return {"query": "supp_total", "value": _locus_json(V), "display": _locus_text(V)}

    def q_nilpotent(self, a, p, cap):
        cap = self.options.max_nilpotence if cap is None else cap
        res = sp.tensor_nilpotence_search(self.env[a], self.env[p] if p else None, cap)
        return {"query": "nilpotent", "value": res.exponent,
                "display": str(res.exponent) if res.found else f"not found up to {cap}",
                "certificate": ser.nilpotence_to_dict(res)}

    def q_vsupp(self, m, n):
        V = sp.cohomological_support(self.dgmod(m), self.dgmod(n))
        return {"query": "vsupp", "value": _locus_json(V), "display": _locus_text(V)}

    def q_cx(self, m, n):
        return {"query": "cx", "value": sp.complexity(self.dgmod(m), self.dgmod(n))}

    def q_zero(self, p):
        return {"query": "zero", "value": cv.is_zero_object(self.env[p])}

    def q_generator(self, p):
        return {"query": "generator", "value": sp.is_generator(self.env[p])}


def replay(result):
    """Reload the certificate embedded in a result and re-check it exactly."""
    cert = result.get("certificate")
    if cert is None:
        return True
    if result["query"] == "supp":
        return ser.certificate_from_dict(cert).verify()
    if result["query"] == "nilpotent":
        return ser.nilpotence_from_dict(cert).verify()
    raise UnsupportedError(f"no replay for {result['query']}")


def verify_report(report):
    return all(replay(r) for r in report["results"])


def execute(script, options=None):
    if isinstance(script, str):
        script = parse(script)
    return Runner(options).run(script)


def is_negative(result):
    """A domain-level false or not-found answer (used by --strict)."""
    return result["value"] is False or (result["query"] == "nilpotent" and result["value"] is None)


def render_text(report):
    lines = []
    for r in report["results"]:
        shown = r.get("display")
        if shown is None:
            v = r["value"]
            shown = str(v).lower() if isinstance(v, bool) else str(v)
        lines.append(f"{r['text']}  ->  {shown}")
    return "\n".join(lines)


def error_object(exc):
    err = {"type": type(exc).__name__, "message": getattr(exc, "message", None) or str(exc)}
    for attr, key in (("line", "line"), ("column", "column")):
        v = getattr(exc, attr, None)
        if v is not None:
            err[key] = v
    if getattr(exc, "expected", None):
        err["expected"] = list(exc.expected)
    for attr in ("invariant", "index"):
        v = getattr(exc, attr, None)
        if v is not None:
            err[attr] = repr(v) if not isinstance(v, (int, str)) else v
    return {"version": ser.VERSION, "error": err}
