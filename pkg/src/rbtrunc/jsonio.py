"""JSON wire formats for scalars, elements, operators and reports."""

from __future__ import annotations

import json
from typing import Any, Optional

from .algebra import AlgebraSpec, TruncElement
from .classify import NotRB, Weight0Data, Weight1Data
from .fields import FieldSpec, parse_field
from .operators import LinearOperator, RBCheck, RBWitness
from .oracle import EnumerationReport


class SchemaError(ValueError):
    """Input parsed as JSON but does not match the expected schema."""

    def __init__(self, path: str, message: str, line: Optional[int] = None):
        self.path = path
        self.line = line
        self.detail = message
        where = f"line {line}, " if line is not None else ""
        super().__init__(f"{where}field {path}: {message}")


def _scalar(F: FieldSpec, x, path: str):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise SchemaError(path, f"expected an integer or 'a/b' string, got {x!r}")
    try:
        return F.coerce(x)
    except (ValueError, ZeroDivisionError) as e:
        raise SchemaError(path, str(e)) from None


def scalar_to_json(F: FieldSpec, a):
    return F.format(a)


def matrix_to_json(F: FieldSpec, M):
    return [[F.format(a) for a in row] for row in M]


def vector_to_json(F: FieldSpec, v):
    return [F.format(a) for a in v]


def element_to_json(x: TruncElement) -> dict:
    F = x.spec.field
    return {"scalar": F.format(x.scalar), "vec": vector_to_json(F, x.vec)}


def element_from_json(spec: AlgebraSpec, obj: Any, path: str = "element") -> TruncElement:
    if not isinstance(obj, dict) or "scalar" not in obj or "vec" not in obj:
        raise SchemaError(path, "expected an object with 'scalar' and 'vec'")
    vec = obj["vec"]
    if not isinstance(vec, list) or len(vec) != spec.n:
        raise SchemaError(f"{path}.vec", f"expected a list of {spec.n} scalars")
    F = spec.field
    return TruncElement(
        spec,
        _scalar(F, obj["scalar"], f"{path}.scalar"),
        tuple(_scalar(F, b, f"{path}.vec[{i}]") for i, b in enumerate(vec)),
    )


def operator_to_json(P: LinearOperator) -> dict:
    return {"field": P.field.to_json(), "n": P.spec.n, "matrix": matrix_to_json(P.field, P.matrix)}


def operator_from_json(obj: Any) -> LinearOperator:
    if not isinstance(obj, dict):
        raise SchemaError("<root>", "expected a JSON object")
    for key in ("field", "n", "matrix"):
        if key not in obj:
            raise SchemaError(key, "missing required field")
    try:
        F = parse_field(obj["field"])
    except (ValueError, TypeError) as e:
        raise SchemaError("field", str(e)) from None
    n = obj["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise SchemaError("n", f"expected an integer >= 1, got {n!r}")
    spec = AlgebraSpec(n, F)
    rows = obj["matrix"]
    d = n + 1
    if not isinstance(rows, list) or len(rows) != d:
        raise SchemaError("matrix", f"expected {d} rows for n={n}")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != d:
            raise SchemaError(f"matrix[{i}]", f"expected a row of {d} scalars")
        out.append(tuple(_scalar(F, a, f"matrix[{i}][{j}]") for j, a in enumerate(row)))
    return LinearOperator(spec, tuple(out))


def _line_of(text: str, path: str) -> Optional[int]:
    key = '"' + path.split("[")[0].split(".")[0] + '"'
    pos = text.find(key)
    if pos < 0:
        return None
    return text.count("\n", 0, pos) + 1


def loads_operator(text: str) -> LinearOperator:
    """Parse operator JSON text; errors carry the offending line where known."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError("<json>", e.msg, e.lineno) from None
    try:
        return operator_from_json(obj)
    except SchemaError as e:
        raise SchemaError(e.path, e.detail, _line_of(text, e.path)) from None


def witness_to_json(w: RBWitness) -> dict:
    return {"pair": list(w.pair), "lhs": element_to_json(w.lhs), "rhs": element_to_json(w.rhs)}


def check_report(P: LinearOperator, lam, result: RBCheck) -> dict:
    F = P.field
    return {
        "weight": F.format(F.coerce(lam)),
        "verdict": "rb" if result.holds else "not-rb",
        "witness": None if result.holds else witness_to_json(result.witness),
    }


def data_to_json(d) -> dict:
    F = d.field
    if isinstance(d, Weight0Data):
        return {"kind": "weight0", "v0": vector_to_json(F, d.v0), "L": matrix_to_json(F, d.L)}
    if isinstance(d, Weight1Data):
        return {"kind": "weight1", "alpha": F.format(d.alpha), "Q": matrix_to_json(F, d.Q)}
    raise TypeError(f"not classification data: {d!r}")


def data_from_json(F: FieldSpec, obj: Any):
    if not isinstance(obj, dict) or obj.get("kind") not in ("weight0", "weight1"):
        raise SchemaError("data.kind", "expected 'weight0' or 'weight1'")
    try:
        if obj["kind"] == "weight0":
            return Weight0Data(F, obj["v0"], obj["L"])
        return Weight1Data(F, obj["alpha"], obj["Q"])
    except KeyError as e:
        raise SchemaError(f"data.{e.args[0]}", "missing required field") from None
    except (ValueError, TypeError) as e:
        raise SchemaError("data", str(e)) from None


def classification_report(F: FieldSpec, lam, verdict) -> dict:
    rb = not isinstance(verdict, NotRB)
    return {
        "weight": F.format(F.coerce(lam)),
        "verdict": "rb" if rb else "not-rb",
        "reason": None if rb else verdict.reason.value,
        "data": data_to_json(verdict) if rb else None,
    }


def enumeration_to_json(r: EnumerationReport, include_mismatches: bool = True) -> dict:
    F = r.field
    out = {
        "prime": F.p,
        "n": r.n,
        "weight": F.format(r.weight),
        "total": r.total_maps,
        "rb_count": r.rb_count,
        "classified_count": r.classified_count,
    }
    if include_mismatches:
        out["mismatches"] = [
            {"index": m.index, "matrix": [list(row) for row in m.matrix], "rb": m.rb, "classified": m.classified}
            for m in r.mismatches
        ]
    else:
        out["mismatch_count"] = r.mismatch_count
    if r.families is not None:
        out["families"] = {str(k): v for k, v in r.families.items()}
    return out
