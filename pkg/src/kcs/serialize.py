"""JSON persistence for rings, ideals, loci, modules, morphisms and certificates.

Top-level documents carry {"version": "kcs-1", "type": ...}; nested objects
omit both.  Polynomials and rationals are always strings in canonical form.
"""

import json

from .curved import CurvedModule, CurvedMorphism
from .errors import KcsError, SchemaError
from .exact_poly import GradedRing, Ideal, Locus
from .koszul import DgEModule, KoszulData
from .support import NilpotenceResult, SupportCertificate

VERSION = "kcs-1"


def _matrix_out(M):
    return [[str(x) for x in row] for row in M]


def _matrix_in(ring, M):
    if not isinstance(M, list) or any(not isinstance(row, list) for row in M):
        raise SchemaError("a matrix must be a list of rows")
    return [[ring.parse(_text(x)) for x in row] for row in M]


def _text(x):
    if not isinstance(x, str):
        raise SchemaError(f"expected a string, got {x!r}")
    return x


def _field(d, name):
    try:
        return d[name]
    except (KeyError, TypeError):
        raise SchemaError(f"missing field {name!r}") from None


def ring_to_dict(R):
    return {"variables": [[n, d] for n, d in R.variables], "order": R.order}


def ring_from_dict(d):
    return GradedRing([(n, deg) for n, deg in _field(d, "variables")], d.get("order", "degrevlex"))


def ideal_to_dict(I):
    return {"ring": ring_to_dict(I.ring), "generators": [str(g) for g in I.generators]}


def ideal_from_dict(d, ring=None):
    R = ring or ring_from_dict(_field(d, "ring"))
    return Ideal(R, [R.parse(_text(g)) for g in _field(d, "generators")])


def locus_to_dict(V):
    return {"ring": ring_to_dict(V.ring), "components": [ideal_to_dict(c) for c in V.components]}


def locus_from_dict(d):
    R = ring_from_dict(_field(d, "ring"))
    return Locus([ideal_from_dict(c, R) for c in _field(d, "components")], R)


def curved_to_dict(P):
    return {"ring": ring_to_dict(P.ring), "curvature": str(P.curvature),
            "degrees": list(P.degrees), "differential": _matrix_out(P.differential)}


def curved_from_dict(d, ring=None):
    R = ring or ring_from_dict(_field(d, "ring"))
    return CurvedModule(R, R.parse(_text(_field(d, "curvature"))), _field(d, "degrees"),
                        _matrix_in(R, _field(d, "differential")))


def morphism_to_dict(f):
    return {"ring": ring_to_dict(f.ring), "source": curved_to_dict(f.source),
            "target": curved_to_dict(f.target), "degree": f.degree,
            "matrix": _matrix_out(f.matrix)}


def morphism_from_dict(d):
    R = ring_from_dict(_field(d, "ring"))
    src = curved_from_dict(_field(d, "source"), R)
    tgt = curved_from_dict(_field(d, "target"), R)
    return CurvedMorphism(src, tgt, _field(d, "degree"), _matrix_in(R, _field(d, "matrix")))


def koszul_to_dict(kd):
    return {"base": ring_to_dict(kd.base), "f": [str(x) for x in kd.f],
            "chi": list(kd.chi_names)}


def koszul_from_dict(d):
    R = ring_from_dict(_field(d, "base"))
    return KoszulData(R, [R.parse(_text(x)) for x in _field(d, "f")], d.get("chi"))


def dgmod_to_dict(M):
    return {"koszul": koszul_to_dict(M.koszul), "degrees": list(M.degrees),
            "differential": _matrix_out(M.differential),
            "operators": [_matrix_out(e) for e in M.operators]}


def dgmod_from_dict(d):
    kd = koszul_from_dict(_field(d, "koszul"))
    R = kd.base
    return DgEModule(kd, _field(d, "degrees"), _matrix_in(R, _field(d, "differential")),
                     [_matrix_in(R, e) for e in _field(d, "operators")])


def certificate_to_dict(cert):
    return {"subject": curved_to_dict(cert.subject),
            "annihilator": [str(g) for g in cert.annihilator.generators],
            "witnesses": [{"generator": str(a), "homotopy": _matrix_out(b.matrix)}
                          for a, b in cert.witnesses]}


def certificate_from_dict(d):
    P = curved_from_dict(_field(d, "subject"))
    R = P.ring
    ann = Ideal(R, [R.parse(_text(g)) for g in _field(d, "annihilator")])
    witnesses = []
    for w in _field(d, "witnesses"):
        a = R.parse(_text(_field(w, "generator")))
        degree = (a.degree if a else 0) + 1
        witnesses.append((a, CurvedMorphism(P, P, degree, _matrix_in(R, _field(w, "homotopy")))))
    return SupportCertificate(P, ann, witnesses)


def nilpotence_to_dict(res):
    out = {"morphism": morphism_to_dict(res.morphism), "exponent": res.exponent,
           "bound": res.bound}
    if res.found:
        out["power"] = morphism_to_dict(res.power)
        out["homotopy"] = _matrix_out(res.witness.matrix)
    return out


def nilpotence_from_dict(d):
    alpha = morphism_from_dict(_field(d, "morphism"))
    n = _field(d, "exponent")
    if n is None:
        return NilpotenceResult(alpha, None, None, None, _field(d, "bound"))
    power = morphism_from_dict(_field(d, "power"))
    R = power.ring
    beta = CurvedMorphism(power.source, power.target, power.degree + 1,
                          _matrix_in(R, _field(d, "homotopy")))
    return NilpotenceResult(alpha, n, beta, power, _field(d, "bound"))


_TYPES = [
    ("ring", GradedRing, ring_to_dict, ring_from_dict),
    ("ideal", Ideal, ideal_to_dict, ideal_from_dict),
    ("locus", Locus, locus_to_dict, locus_from_dict),
    ("curved_module", CurvedModule, curved_to_dict, curved_from_dict),
    ("morphism", CurvedMorphism, morphism_to_dict, morphism_from_dict),
    ("koszul", KoszulData, koszul_to_dict, koszul_from_dict),
    ("dg_module", DgEModule, dgmod_to_dict, dgmod_from_dict),
    ("certificate", SupportCertificate, certificate_to_dict, certificate_from_dict),
    ("nilpotence", NilpotenceResult, nilpotence_to_dict, nilpotence_from_dict),
]


def to_dict(obj):
    """Nested (version-free) JSON form of any domain object."""
    for name, cls, out, _ in _TYPES:
        if isinstance(obj, cls):
            return out(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def type_name(obj):
    for name, cls, _, _ in _TYPES:
        if isinstance(obj, cls):
            return name
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_document(obj):
    return {"version": VERSION, "type": type_name(obj), **to_dict(obj)}


def from_document(doc):
    if not isinstance(doc, dict):
        raise SchemaError("a document must be a JSON object")
    version = doc.get("version")
    if version != VERSION:
        raise SchemaError(f"unsupported schema version {version!r}, expected {VERSION!r}")
    kind = doc.get("type")
    for name, _, _, back in _TYPES:
        if name == kind:
            try:
                return back(doc)
            except SchemaError:
                raise
            except KcsError as exc:
                raise SchemaError(f"invalid {kind}: {exc}") from exc
    raise SchemaError(f"unknown document type {kind!r}")


def dumps(obj, **kwargs):
    return json.dumps(to_document(obj), sort_keys=True, **kwargs)


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON: {exc}") from exc
    return from_document(doc)
