"""Algebra description files (JSON): schema validation, loading, dumping.

Format::

    {
      "field": {"kind": "rational"} | {"kind": "prime", "p": P},
      "group": {"kind": "cyclic", "n": K}
               | {"kind": "table", "labels": [...], "table": [[...]]},
      "basis": [labels],
      "grading": {label: degreeLabel},
      "mult": [[i, j, k, "coeff"], ...],
      "subalgebras": {"B": [vectors], "C": [vectors], "b_is_ideal": bool}
    }

Vectors are arrays of rational strings of length dim; "subalgebras" is
optional.  Structural problems raise LoadError with a JSON pointer; the
loaded algebra is invariant-checked (grading compatibility and
associativity) with the violating triple named.
"""

from __future__ import annotations

import json
from pathlib import Path

import jsonschema

from .algebras import GradedAlgebra, SubalgebraPair, Subspace
from .errors import AlgebraError, FieldError, GroupAxiomError, LoadError
from .fields import Field
from .groups import GroupTable, cyclic_group, group_from_table

SCHEMA = {
    "type": "object",
    "required": ["field", "group", "basis", "grading", "mult"],
    "additionalProperties": False,
    "properties": {
        "field": {
            "type": "object",
            "required": ["kind"],
            "properties": {
                "kind": {"enum": ["rational", "prime"]},
                "p": {"type": "integer", "minimum": 2},
            },
            "additionalProperties": False,
        },
        "group": {
            "type": "object",
            "required": ["kind"],
            "properties": {
                "kind": {"enum": ["cyclic", "table"]},
                "n": {"type": "integer", "minimum": 1},
                "labels": {"type": "array", "items": {"type": "string"}},
                "table": {
                    "type": "array",
                    "items": {"type": "array", "items": {"type": "integer"}},
                },
            },
            "additionalProperties": False,
        },
        "basis": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "grading": {"type": "object", "additionalProperties": {"type": "string"}},
        "mult": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [
                    {"type": "integer"},
                    {"type": "integer"},
                    {"type": "integer"},
                    {"type": "string"},
                ],
                "minItems": 4,
                "maxItems": 4,
            },
        },
        "subalgebras": {
            "type": "object",
            "required": ["B", "C"],
            "properties": {
                "B": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
                "C": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
                "b_is_ideal": {"type": "boolean"},
            },
            "additionalProperties": False,
        },
    },
}


def _build_field(spec: dict) -> Field:
    if spec["kind"] == "rational":
        return Field.rationals()
    if "p" not in spec:
        raise LoadError("prime field needs 'p'", "/field")
    return Field.prime(spec["p"])


def _build_group(spec: dict) -> GroupTable:
    if spec["kind"] == "cyclic":
        if "n" not in spec:
            raise LoadError("cyclic group needs 'n'", "/group")
        return cyclic_group(spec["n"])
    if "labels" not in spec or "table" not in spec:
        raise LoadError("table group needs 'labels' and 'table'", "/group")
    return group_from_table(spec["labels"], spec["table"])


def _parse_vector(field: Field, entries, dim: int, pointer: str) -> dict:
    if len(entries) != dim:
        raise LoadError(f"vector length {len(entries)} != dim {dim}", pointer)
    vec = {}
    for i, text in enumerate(entries):
        try:
            c = field.parse(text)
        except FieldError as exc:
            raise LoadError(str(exc), f"{pointer}/{i}") from None
        if not field.is_zero(c):
            vec[i] = c
    return vec


def load_algebra_dict(doc: dict) -> tuple[GradedAlgebra, SubalgebraPair | None]:
    """Build and invariant-check an algebra (and optional pair) from a dict."""
    try:
        jsonschema.validate(doc, SCHEMA)
    except jsonschema.ValidationError as exc:
        raise LoadError(exc.message, exc.json_path.replace("$", "") or "/") from None
    try:
        field = _build_field(doc["field"])
        group = _build_group(doc["group"])
    except (FieldError, GroupAxiomError) as exc:
        raise LoadError(str(exc), "/field|/group") from None

    labels = doc["basis"]
    if len(set(labels)) != len(labels):
        raise LoadError("duplicate basis labels", "/basis")
    index = {lab: i for i, lab in enumerate(labels)}
    dim = len(labels)

    grading = [None] * dim
    for lab, deg_label in doc["grading"].items():
        if lab not in index:
            raise LoadError(f"grading mentions unknown basis label {lab!r}", "/grading")
        try:
            grading[index[lab]] = group.index(deg_label)
        except GroupAxiomError as exc:
            raise LoadError(str(exc), f"/grading/{lab}") from None
    missing = [labels[i] for i, g in enumerate(grading) if g is None]
    if missing:
        raise LoadError(f"grading missing for basis labels {missing}", "/grading")

    mult: dict = {}
    for pos, (i, j, k, coeff_text) in enumerate(doc["mult"]):
        for name, v in (("i", i), ("j", j), ("k", k)):
            if not 0 <= v < dim:
                raise LoadError(f"mult index {name}={v} out of range", f"/mult/{pos}")
        try:
            c = field.parse(coeff_text)
        except FieldError as exc:
            raise LoadError(str(exc), f"/mult/{pos}/3") from None
        if field.is_zero(c):
            continue
        row = mult.setdefault((i, j), {})
        row[k] = field.add(row.get(k, field.zero), c)

    algebra = GradedAlgebra(field, group, labels, grading, mult, name="loaded")
    try:
        algebra.validate()
    except AlgebraError as exc:
        raise LoadError(str(exc), "/mult") from None

    pair = None
    if "subalgebras" in doc:
        sub = doc["subalgebras"]
        b = Subspace(algebra, [
            _parse_vector(field, v, dim, f"/subalgebras/B/{i}") for i, v in enumerate(sub["B"])
        ])
        c = Subspace(algebra, [
            _parse_vector(field, v, dim, f"/subalgebras/C/{i}") for i, v in enumerate(sub["C"])
        ])
        pair = SubalgebraPair(b, c, bool(sub.get("b_is_ideal", False)))
        try:
            pair.validate()
        except AlgebraError as exc:
            raise LoadError(str(exc), "/subalgebras") from None
    return algebra, pair


def load_algebra(path) -> tuple[GradedAlgebra, SubalgebraPair | None]:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise LoadError(f"invalid JSON: {exc}", "/") from None
    if not isinstance(doc, dict):
        raise LoadError("top-level JSON value must be an object", "/")
    return load_algebra_dict(doc)


def dump_algebra(algebra: GradedAlgebra, pair: SubalgebraPair | None = None) -> dict:
    """Serialize an algebra (and optional pair) back to the file format."""
    field_spec = (
        {"kind": "rational"} if algebra.field.kind == "rational"
        else {"kind": "prime", "p": algebra.field.p}
    )
    group = algebra.group
    group_spec = {
        "kind": "table",
        "labels": list(group.labels),
        "table": [list(row) for row in group.table],
    }
    mult_rows = []
    for (i, j) in sorted(algebra.mult):
        for k in sorted(algebra.mult[(i, j)]):
            mult_rows.append([i, j, k, algebra.field.fmt(algebra.mult[(i, j)][k])])
    doc = {
        "field": field_spec,
        "group": group_spec,
        "basis": list(algebra.labels),
        "grading": {lab: group.label(algebra.grading[i]) for i, lab in enumerate(algebra.labels)},
        "mult": mult_rows,
    }
    if pair is not None:
        fmt = algebra.field.fmt
        zero = algebra.field.fmt(algebra.field.zero)

        def dense(rows):
            return [[fmt(r[i]) if i in r else zero for i in range(algebra.dim)] for r in rows]

        doc["subalgebras"] = {
            "B": dense(pair.b.rows),
            "C": dense(pair.c.rows),
            "b_is_ideal": pair.b_is_ideal,
        }
    return doc
