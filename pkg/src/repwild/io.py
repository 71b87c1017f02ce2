"""JSON files for algebras, modules and pointed data (schema 1, unknown keys rejected)."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .algebra import AlgebraTable
from .errors import SchemaError, ValidationError
from .fields import field_from_json
from .modrep import ModuleRep

SCHEMA = 1
ALGEBRA_KEYS = {"schema", "kind", "name", "family", "field", "dim", "structure", "unit", "labels",
                "augmentation", "grading", "generators"}
ALGEBRA_REQUIRED = {"schema", "kind", "field", "dim", "structure", "unit"}
MODULE_KEYS = {"schema", "kind", "name", "field", "algebra_dim", "degrees", "action"}
MODULE_REQUIRED = {"schema", "kind", "field", "algebra_dim", "action"}
DATUM_KEYS = {"schema", "kind", "orders", "elements", "chars", "cartan"}


def _flat(x):
    return not isinstance(x, (list, dict)) or (isinstance(x, list) and all(not isinstance(y, (list, dict)) for y in x))


def _emit(obj, ind):
    pad = "  " * (ind + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_emit(obj[k], ind + 1)}" for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + "  " * ind + "}"
    if isinstance(obj, list) and obj and not _flat(obj):
        return "[\n" + ",\n".join(pad + _emit(x, ind + 1) for x in obj) + "\n" + "  " * ind + "]"
    return json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))


def dumps(obj):
    """Canonical text: sorted keys, one line per innermost scalar array, trailing newline."""
    return _emit(obj, 0) + "\n"


def _read(src):
    if isinstance(src, dict):
        return src
    text = Path(src).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg} (line {exc.lineno})", "") from None


def _check_keys(obj, allowed, required, kind):
    if not isinstance(obj, dict):
        raise SchemaError("top level must be an object", "")
    extra = sorted(set(obj) - allowed)
    if extra:
        raise SchemaError(f"unknown key {extra[0]!r}", "/" + extra[0])
    missing = sorted(required - set(obj))
    if missing:
        raise SchemaError(f"missing key {missing[0]!r}", "/" + missing[0])
    if obj["schema"] != SCHEMA:
        raise SchemaError(f"unsupported schema {obj['schema']!r}", "/schema")
    if obj["kind"] != kind:
        raise SchemaError(f"expected kind {kind!r}, got {obj['kind']!r}", "/kind")


def _int(x, pointer):
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(f"expected an integer, got {x!r}", pointer)
    return x


def _list(x, pointer, length=None):
    if not isinstance(x, list):
        raise SchemaError("expected an array", pointer)
    if length is not None and len(x) != length:
        raise SchemaError(f"expected {length} entries, got {len(x)}", pointer)
    return x


# -- algebras ----------------------------------------------------------------------

def algebra_to_json(A):
    F = A.field
    entries = []
    for (i, j), row in A.struct.items():
        for k, c in row.items():
            entries.append((i, j, k, F.to_json(c)))
    entries.sort(key=lambda e: e[:3])
    obj = {
        "schema": SCHEMA,
        "kind": "algebra",
        "name": A.name,
        "family": A.family,
        "field": F.descriptor.to_json(),
        "dim": A.dim,
        "structure": [list(e) for e in entries],
        "unit": [F.to_json(c) for c in A.unit],
        "labels": list(A.labels),
        "augmentation": None if A.augmentation is None else [F.to_json(c) for c in A.augmentation],
        "grading": [list(g) for g in A.grading] if A.is_graded else None,
        "generators": list(A.generators),
    }
    return obj


def algebra_from_json(obj):
    _check_keys(obj, ALGEBRA_KEYS, ALGEBRA_REQUIRED, "algebra")
    F = field_from_json(obj["field"], "/field")
    d = _int(obj["dim"], "/dim")
    if d < 1:
        raise SchemaError("dim must be positive", "/dim")
    struct = {}
    seen = set()
    for n, e in enumerate(_list(obj["structure"], "/structure")):
        ptr = f"/structure/{n}"
        _list(e, ptr, 4)
        i, j, k = (_int(e[t], f"{ptr}/{t}") for t in range(3))
        for t, v in enumerate((i, j, k)):
            if not 0 <= v < d:
                raise SchemaError(f"index {v} out of range for dim {d}", f"{ptr}/{t}")
        if (i, j, k) in seen:
            raise SchemaError(f"duplicate entry ({i}, {j}, {k})", ptr)
        seen.add((i, j, k))
        struct.setdefault((i, j), {})[k] = F.from_json(e[3], f"{ptr}/3")

    def vec(key):
        v = _list(obj[key], "/" + key, d)
        return [F.from_json(x, f"/{key}/{t}") for t, x in enumerate(v)]

    unit = vec("unit")
    aug = vec("augmentation") if obj.get("augmentation") is not None else None
    labels = obj.get("labels")
    if labels is not None:
        _list(labels, "/labels", d)
        if not all(isinstance(s, str) for s in labels):
            raise SchemaError("labels must be strings", "/labels")
    grading = obj.get("grading")
    if grading is not None:
        _list(grading, "/grading", d)
        rank = None
        for t, g in enumerate(grading):
            _list(g, f"/grading/{t}")
            for s, x in enumerate(g):
                _int(x, f"/grading/{t}/{s}")
            if rank is None:
                rank = len(g)
            elif len(g) != rank:
                raise SchemaError("all degrees must have the same length", f"/grading/{t}")
    gens = obj.get("generators")
    if gens is not None:
        for t, x in enumerate(_list(gens, "/generators")):
            if not 0 <= _int(x, f"/generators/{t}") < d:
                raise SchemaError("generator index out of range", f"/generators/{t}")
    return AlgebraTable(F, d, struct, unit, labels, aug, grading, obj.get("name"), obj.get("family"), gens)


def load_algebra(src):
    return algebra_from_json(_read(src))


def store_algebra(A, path=None):
    text = dumps(algebra_to_json(A))
    if path is not None:
        Path(path).write_text(text)
    return text


# -- modules -----------------------------------------------------------------------

def module_to_json(M):
    F = M.F
    mats = [F.to_list(m) for m in M.actions()]
    mats = [[[F.to_json(c) for c in row] for row in m] for m in mats]
    return {
        "schema": SCHEMA,
        "kind": "module",
        "name": M.name,
        "field": F.descriptor.to_json(),
        "algebra_dim": M.algebra.dim,
        "degrees": [list(d) for d in M.degrees] if M.graded else None,
        "action": mats,
    }


def module_from_json(obj, A, check=True):
    _check_keys(obj, MODULE_KEYS, MODULE_REQUIRED, "module")
    F = field_from_json(obj["field"], "/field")
    if F != A.field:
        raise SchemaError(f"module is over {F}, algebra over {A.field}", "/field")
    if _int(obj["algebra_dim"], "/algebra_dim") != A.dim:
        raise SchemaError(f"module is for an algebra of dim {obj['algebra_dim']}, got {A.dim}", "/algebra_dim")
    acts = _list(obj["action"], "/action", A.dim)
    n = None
    mats = []
    for k, m in enumerate(acts):
        _list(m, f"/action/{k}")
        if n is None:
            n = len(m)
        _list(m, f"/action/{k}", n)
        rows = []
        for r, row in enumerate(m):
            _list(row, f"/action/{k}/{r}", n)
            rows.append([F.from_json(x, f"/action/{k}/{r}/{c}") for c, x in enumerate(row)])
        mats.append(F.array(rows) if n else F.zeros((0, 0)))
    degrees = obj.get("degrees")
    if degrees is not None:
        _list(degrees, "/degrees", n)
        if not A.is_graded:
            degrees = None
        else:
            for t, g in enumerate(degrees):
                _list(g, f"/degrees/{t}", A.rank)
    M = ModuleRep.from_matrices(A, mats, degrees, obj.get("name") or "M")
    if check:
        viol = M.validate()
        if viol:
            raise ValidationError(f"module {M.name} violates the module axioms: {viol[:3]}", viol)
    return M


def load_module(src, A, check=True):
    return module_from_json(_read(src), A, check)


def store_module(M, path=None):
    text = dumps(module_to_json(M))
    if path is not None:
        Path(path).write_text(text)
    return text


# -- pointed data ---------------------------------------------------------------------

def load_datum(src):
    from .combinatorics import PointedDatum

    obj = _read(src)
    _check_keys(obj, DATUM_KEYS, DATUM_KEYS, "pointed_datum")
    for key in ("orders", "elements", "chars", "cartan"):
        _list(obj[key], "/" + key)
    for t, x in enumerate(obj["orders"]):
        _int(x, f"/orders/{t}")
    for key in ("elements", "chars", "cartan"):
        for t, row in enumerate(obj[key]):
            for s, x in enumerate(_list(row, f"/{key}/{t}")):
                _int(x, f"/{key}/{t}/{s}")
    return PointedDatum.from_json(obj)


def store_datum(D, path=None):
    text = dumps(D.to_json())
    if path is not None:
        Path(path).write_text(text)
    return text


def as_int_matrix(F, M):
    """Plain nested lists of JSON scalars for a matrix (used in reports)."""
    return [[F.to_json(c) for c in row] for row in F.to_list(np.asarray(M))]
