"""JSON ingestion and emission for algebras, maps and reports."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .errors import GradingViolation, SizeMismatch
from .fields import Field, parse_field
from .linalg import Matrix
from .superalgebra import LinearMap, Report, SuperAlgebra


def field_selector(F: Field) -> str:
    """Inverse of :func:`parse_field`."""
    if F.kind == "Q":
        return "q"
    if F.kind == "Qi":
        return "qi"
    if F.kind == "GF":
        return f"gf{F.modulus}"
    head = "ratfunc" if F.base.kind == "Q" else field_selector(F.base)
    return f"{head}:{','.join(F.variables)}"


def _field_from_json(spec) -> Field:
    if isinstance(spec, str):
        return parse_field(spec)
    if isinstance(spec, Mapping):
        if "selector" in spec:
            return parse_field(spec["selector"])
        kind = str(spec.get("kind", "q")).lower()
        vars_ = spec.get("vars") or spec.get("variables") or []
        head = f"gf{spec['p']}" if kind == "gf" else kind
        return parse_field(f"{head}:{','.join(vars_)}" if vars_ else head)
    raise ValueError(f"bad field description {spec!r}")


def algebra_to_json(A: SuperAlgebra) -> dict:
    F = A.field
    table = []
    for (i, j), vec in sorted(A._table.items()):
        if vec:
            table.append([i, j, [[k, F.format(c)] for k, c in sorted(vec.items())]])
    return {
        "field": {"selector": field_selector(F)},
        "dim": A.dim,
        "parity": list(A.parity),
        "names": list(A.names),
        "table": table,
    }


def algebra_from_json(data: Mapping[str, Any], check: bool = True) -> SuperAlgebra:
    """Build an algebra from the shared JSON layout; omitted pairs multiply to zero."""
    try:
        F = _field_from_json(data.get("field", "q"))
        n = int(data["dim"])
        parity = tuple(int(p) for p in data["parity"])
        names = data.get("names")
        rows = data.get("table", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed algebra JSON: {exc}") from exc
    if len(parity) != n or (names is not None and len(names) != n):
        raise SizeMismatch("parity/names length differs from dim")
    table: dict = {}
    for entry in rows:
        i, j, terms = entry
        if not (0 <= i < n and 0 <= j < n):
            raise SizeMismatch(f"index ({i},{j}) out of range")
        vec = table.setdefault((int(i), int(j)), {})
        for k, coeff in terms:
            if not 0 <= k < n:
                raise SizeMismatch(f"index {k} out of range")
            c = F.parse(coeff) if isinstance(coeff, str) else F(coeff)
            vec[int(k)] = vec.get(int(k), F.zero) + c
    return SuperAlgebra(F, parity, table, tuple(names) if names else None, check=check)


def load_algebra(path: str | Path, check: bool = True) -> SuperAlgebra:
    return algebra_from_json(json.loads(Path(path).read_text()), check=check)


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [[m.field.format(c) for c in row] for row in m.rows]


def map_to_json(d: LinearMap) -> dict:
    return {"parity": d.parity, "matrix": matrix_to_json(d.matrix)}


def _plain(v):
    """Make report details JSON-safe (tuples to lists, field values to strings)."""
    if isinstance(v, Mapping):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, set, frozenset)):
        seq = sorted(v, key=str) if isinstance(v, (set, frozenset)) else v
        return [_plain(x) for x in seq]
    if isinstance(v, LinearMap):
        return map_to_json(v)
    if isinstance(v, Matrix):
        return matrix_to_json(v)
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    return str(v)


def report_to_json(rep: Report) -> dict:
    return {"name": rep.name, "passed": bool(rep.passed),
            "failures": _plain(rep.failures[:20]), "failure_count": len(rep.failures),
            "details": _plain(rep.details)}


def dumps(obj) -> str:
    """Deterministic JSON text."""
    return json.dumps(_plain(obj), indent=2, sort_keys=True)
