"""JSON encoding of matrices, objects and morphisms.

Matrix: ``{"rows": n, "cols": m, "entries": [["1/2", "0"], ...]}`` row-major.
Object: ``{"dim": n, "endo": <matrix>}`` or ``{"jordan_type": [3, 1]}``.
Morphism: ``{"src": <object>, "dst": <object>, "mat": <matrix>}``.
The field is declared once per document, ``{"field": "Q"}`` or
``{"field": "Fp", "p": 7}``, and defaults to the caller's choice when absent.
"""

from __future__ import annotations

import copy
import json
from functools import lru_cache
from importlib import resources
from typing import Any

import jsonschema

from .core import JordanType, NilMorphism, NilObject, canonical_object
from .field import Field, field_from_json
from .linalg import Mat


class SchemaError(ValueError):
    pass


@lru_cache(maxsize=None)
def schema() -> dict:
    text = resources.files("nilcat").joinpath("schemas/nilcat.schema.json").read_text("utf-8")
    return json.loads(text)


def validate(doc: Any, kind: str) -> None:
    """Validate ``doc`` against the ``kind`` definition (matrix, object, morphism, sequence)."""
    root = copy.deepcopy(schema())
    if kind not in root["$defs"]:
        raise SchemaError(f"no schema for {kind!r}")
    root["$ref"] = f"#/$defs/{kind}"
    try:
        jsonschema.validate(doc, root)
    except jsonschema.ValidationError as exc:
        raise SchemaError(f"{kind} document: {exc.message}") from exc


def document_field(doc: dict, default: Field) -> Field:
    if isinstance(doc, dict) and "field" in doc:
        validate({k: doc[k] for k in ("field", "p") if k in doc}, "field")
        return field_from_json(doc)
    return default


def encode_matrix(m: Mat) -> dict:
    return {"rows": m.rows, "cols": m.cols,
            "entries": [[m.field.format(e) for e in m.row(i)] for i in range(m.rows)]}


def decode_matrix(doc: dict, field: Field) -> Mat:
    rows, cols, entries = doc["rows"], doc["cols"], doc["entries"]
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise SchemaError(f"matrix entries do not match the declared {rows}x{cols} shape")
    return Mat(rows, cols, [field.parse(e) for r in entries for e in r], field)


def encode_object(a: NilObject) -> dict:
    return {"dim": a.dim, "endo": encode_matrix(a.endo)}


def decode_object(doc: dict, field: Field) -> NilObject:
    if "jordan_type" in doc:
        return canonical_object(JordanType(tuple(doc["jordan_type"])), field)
    return NilObject(doc["dim"], decode_matrix(doc["endo"], field))


def encode_morphism(f: NilMorphism) -> dict:
    return {"src": encode_object(f.src), "dst": encode_object(f.dst), "mat": encode_matrix(f.mat)}


def decode_morphism(doc: dict, field: Field) -> NilMorphism:
    return NilMorphism(decode_object(doc["src"], field), decode_object(doc["dst"], field),
                       decode_matrix(doc["mat"], field))


def load(doc: dict, kind: str, default_field: Field):
    """Validate and decode a whole document, returning (value, field)."""
    validate(doc, kind)
    field = document_field(doc, default_field)
    if kind == "matrix":
        return decode_matrix(doc, field), field
    if kind == "object":
        return decode_object(doc, field), field
    if kind == "morphism":
        return decode_morphism(doc, field), field
    if kind == "sequence":
        return (decode_morphism(doc["f"], field), decode_morphism(doc["g"], field)), field
    raise SchemaError(f"unknown document kind {kind!r}")


def to_jsonable(value: Any) -> Any:
    """Recursively replace matrices, objects and morphisms by their encodings."""
    if isinstance(value, Mat):
        return encode_matrix(value)
    if isinstance(value, NilObject):
        return encode_object(value)
    if isinstance(value, NilMorphism):
        return encode_morphism(value)
    if isinstance(value, JordanType):
        return list(value.parts)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


def dumps(value: Any) -> str:
    return json.dumps(to_jsonable(value), indent=2, sort_keys=True) + "\n"
