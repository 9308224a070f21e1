"""
JSON file formats.

Every document carries a ``kind`` tag and the field modulus. Exponents are
integer arrays, coefficients canonical representatives in ``[0, p)``, and
terms are written in (component, psi) order with zero terms omitted, so
serialization is byte-stable.

    matrix   {"kind", "field", "r", "k", "l", "rows": [[terms, ...], ...]}
    series   {"kind", "field", "r", "l", "bound",
              "coeffs": [{"component", "exp", "coef"}, ...]}
    slice    {"kind", "field", "r", "l", "bound", "dim", "checked_degree",
              "certificate", "system": <matrix>, "basis": [[coeff, ...], ...]}
    scalars  {"kind", "field", "values": [...]}

where ``terms`` is a list of ``{"exp": [...], "coef": c}``.
"""

from __future__ import annotations

import json
from pathlib import Path

import jsonschema

from .behavior import AutoregressiveSystem, BehaviorSlice
from .errors import SchemaError
from .polysys import PolyMatrix, Polynomial, PolyVector
from .scalars import GF
from .series import SeriesVector, TruncatedSeries

_nat = {"type": "integer", "minimum": 0}
_exp = {"type": "array", "items": _nat}
_term = {
    "type": "object",
    "required": ["exp", "coef"],
    "properties": {"exp": _exp, "coef": {"type": "integer"}},
    "additionalProperties": False,
}
_coeff = {
    "type": "object",
    "required": ["component", "exp", "coef"],
    "properties": {"component": _nat, "exp": _exp, "coef": {"type": "integer"}},
    "additionalProperties": False,
}
_head = {
    "kind": {"type": "string"},
    "field": {"type": "integer"},
    "r": {"type": "integer", "minimum": 1},
}

MATRIX_SCHEMA = {
    "type": "object",
    "required": ["kind", "field", "r", "k", "l", "rows"],
    "properties": {
        **_head,
        "kind": {"const": "matrix"},
        "k": {"type": "integer", "minimum": 1},
        "l": {"type": "integer", "minimum": 1},
        "rows": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "array", "items": _term}},
        },
    },
    "additionalProperties": False,
}

SERIES_SCHEMA = {
    "type": "object",
    "required": ["kind", "field", "r", "l", "bound", "coeffs"],
    "properties": {
        **_head,
        "kind": {"const": "series"},
        "l": {"type": "integer", "minimum": 1},
        "bound": {"type": "integer", "minimum": -1},
        "coeffs": {"type": "array", "items": _coeff},
    },
    "additionalProperties": False,
}

SLICE_SCHEMA = {
    "type": "object",
    "required": ["kind", "field", "r", "l", "bound", "dim", "checked_degree",
                 "certificate", "system", "basis"],
    "properties": {
        **_head,
        "kind": {"const": "slice"},
        "l": {"type": "integer", "minimum": 1},
        "bound": {"type": "integer", "minimum": 0},
        "dim": _nat,
        "checked_degree": {"type": "integer"},
        "certificate": {"type": "boolean"},
        "system": MATRIX_SCHEMA,
        "basis": {"type": "array", "items": {"type": "array", "items": _coeff}},
    },
    "additionalProperties": False,
}

SCALARS_SCHEMA = {
    "type": "object",
    "required": ["kind", "field", "values"],
    "properties": {
        "kind": {"const": "scalars"},
        "field": {"type": "integer"},
        "values": {"type": "array", "items": _nat},
    },
    "additionalProperties": False,
}

SCHEMAS = {"matrix": MATRIX_SCHEMA, "series": SERIES_SCHEMA, "slice": SLICE_SCHEMA,
           "scalars": SCALARS_SCHEMA}


def _pretty(obj, indent: int, width: int = 88) -> str:
    flat = json.dumps(obj, separators=(", ", ": "))
    if len(flat) + indent <= width or not isinstance(obj, (dict, list)) or not obj:
        return flat
    pad = " " * (indent + 1)
    if isinstance(obj, dict):
        items = [f"{pad}{json.dumps(k)}: {_pretty(v, indent + 1, width)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + " " * indent + "}"
    items = [pad + _pretty(v, indent + 1, width) for v in obj]
    return "[\n" + ",\n".join(items) + "\n" + " " * indent + "]"


def dumps(doc: dict) -> str:
    """Deterministic JSON text: containers that fit on one line stay inline."""
    return _pretty(doc, 0) + "\n"


def loads(text: str) -> dict:
    """Parse and schema-check a document; raises SchemaError."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("kind") not in SCHEMAS:
        raise SchemaError(f"expected an object with kind in {sorted(SCHEMAS)}")
    try:
        jsonschema.validate(doc, SCHEMAS[doc["kind"]])
    except jsonschema.ValidationError as exc:
        raise SchemaError(f"{doc['kind']} file: {exc.message}") from exc
    return doc


def read(path) -> dict:
    return loads(Path(path).read_text())


def write(path, doc: dict) -> None:
    Path(path).write_text(dumps(doc))


# -- encoders ---------------------------------------------------------------

def _terms(d: Polynomial) -> list[dict]:
    return [{"exp": list(e), "coef": c} for e, c in d.items()]


def matrix_to_doc(R: PolyMatrix) -> dict:
    return {
        "kind": "matrix", "field": R.field.p, "r": R.r, "k": R.k, "l": R.l,
        "rows": [[_terms(d) for d in row] for row in R.rows],
    }


def _coeff_list(V: SeriesVector) -> list[dict]:
    return [
        {"component": j, "exp": list(e), "coef": c}
        for j, w in enumerate(V) for e, c in w.coeffs.items()
    ]


def series_to_doc(V: SeriesVector | TruncatedSeries) -> dict:
    if isinstance(V, TruncatedSeries):
        V = SeriesVector([V])
    return {"kind": "series", "field": V.field.p, "r": V.r, "l": V.l, "bound": V.bound,
            "coeffs": _coeff_list(V)}


def slice_to_doc(slc: BehaviorSlice) -> dict:
    sys_ = slc.system
    cert = slc.certify()
    return {
        "kind": "slice", "field": sys_.field.p, "r": sys_.r, "l": sys_.l,
        "bound": slc.bound, "dim": slc.dim, "checked_degree": cert.checked_degree,
        "certificate": cert.passed, "system": matrix_to_doc(sys_.R),
        "basis": [_coeff_list(V) for V in slc.basis],
    }


def scalars_to_doc(field, values) -> dict:
    p = field.p if isinstance(field, GF) else int(field)
    return {"kind": "scalars", "field": p, "values": [int(v) % p for v in values]}


# -- decoders ---------------------------------------------------------------

def _expect(doc: dict, kind: str):
    if doc.get("kind") != kind:
        raise SchemaError(f"expected a {kind} file, got {doc.get('kind')!r}")


def _poly(F: GF, r: int, terms: list[dict]) -> Polynomial:
    coeffs: dict = {}
    for t in terms:
        e = tuple(t["exp"])
        if len(e) != r:
            raise SchemaError(f"exponent {t['exp']} should have {r} entries")
        if e in coeffs:
            raise SchemaError(f"exponent {t['exp']} listed twice")
        coeffs[e] = t["coef"]
    return Polynomial(F, r, coeffs)


def doc_to_matrix(doc: dict) -> PolyMatrix:
    _expect(doc, "matrix")
    F, r, k, l = GF(doc["field"]), doc["r"], doc["k"], doc["l"]
    rows = doc["rows"]
    if len(rows) != k or any(len(row) != l for row in rows):
        raise SchemaError(f"matrix rows do not match the declared shape {k}x{l}")
    return PolyMatrix([PolyVector([_poly(F, r, t) for t in row]) for row in rows])


def _vector(F: GF, r: int, l: int, bound: int, entries: list[dict]) -> SeriesVector:
    comps: list[dict] = [{} for _ in range(l)]
    for c in entries:
        j, e = c["component"], tuple(c["exp"])
        if j >= l:
            raise SchemaError(f"component {j} out of range for l={l}")
        if len(e) != r:
            raise SchemaError(f"exponent {c['exp']} should have {r} entries")
        if sum(e) > bound:
            raise SchemaError(f"exponent {c['exp']} lies outside the ball of degree {bound}")
        if e in comps[j]:
            raise SchemaError(f"coefficient ({j}, {c['exp']}) listed twice")
        comps[j][e] = c["coef"]
    return SeriesVector([TruncatedSeries.from_coeffs(F, r, bound, m) for m in comps])


def doc_to_series(doc: dict) -> SeriesVector:
    _expect(doc, "series")
    return _vector(GF(doc["field"]), doc["r"], doc["l"], doc["bound"], doc["coeffs"])


def doc_to_slice(doc: dict) -> BehaviorSlice:
    _expect(doc, "slice")
    R = doc_to_matrix(doc["system"])
    F, r, l, D = GF(doc["field"]), doc["r"], doc["l"], doc["bound"]
    if (R.field, R.r, R.l) != (F, r, l):
        raise SchemaError("slice header does not match its system")
    basis = tuple(_vector(F, r, l, D, entries) for entries in doc["basis"])
    if len(basis) != doc["dim"]:
        raise SchemaError(f"dim {doc['dim']} does not match {len(basis)} basis vectors")
    return BehaviorSlice(AutoregressiveSystem(R), D, basis)


def doc_to_scalars(doc: dict) -> tuple[GF, list[int]]:
    _expect(doc, "scalars")
    return GF(doc["field"]), list(doc["values"])


def canonical(doc: dict) -> dict:
    """Parse a document into objects and re-encode it."""
    kind = doc["kind"]
    if kind == "matrix":
        return matrix_to_doc(doc_to_matrix(doc))
    if kind == "series":
        return series_to_doc(doc_to_series(doc))
    if kind == "slice":
        slc = doc_to_slice(doc)
        out = slice_to_doc(slc)
        # the stored certificate is a record of the producing run
        out["certificate"], out["checked_degree"] = doc["certificate"], doc["checked_degree"]
        return out
    F, vals = doc_to_scalars(doc)
    return scalars_to_doc(F, vals)

