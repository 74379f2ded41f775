"""JSON encoding of fields, matrices, codes, profiles and witnesses.

Field elements serialize as canonical integers; values at or above 2^53
become decimal strings so the files stay readable by double-based JSON
parsers.  Loading re-verifies supplied moduli and matrix ranks.
"""

from __future__ import annotations

import json
from typing import Any

from .codes import LinearCode, make_code
from .fields import FieldCtx, make_field
from .matgf import GFMatrix

_SAFE_INT = 1 << 53


def encode_int(value: int) -> int | str:
    return value if value < _SAFE_INT else str(value)


def decode_int(value: int | str) -> int:
    return int(value)


def field_to_json(field: FieldCtx) -> dict:
    d = field.descriptor()
    d["tower"] = [
        {"deg": step["deg"], "modulus": [encode_int(c) for c in step["modulus"]]}
        for step in d["tower"]
    ]
    return d


def field_from_json(d: dict) -> FieldCtx:
    steps = [
        (step["deg"], tuple(decode_int(c) for c in step["modulus"]))
        for step in d.get("tower", [])
    ]
    return make_field(int(d["p"]), steps)


def matrix_to_json(m: GFMatrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "data": [[encode_int(x) for x in row] for row in m.to_encodings()],
    }


def matrix_from_json(field: FieldCtx, d: dict) -> GFMatrix:
    data = [[decode_int(x) for x in row] for row in d["data"]]
    if len(data) != d["rows"] or any(len(r) != d["cols"] for r in data):
        raise ValueError("matrix payload shape mismatch")
    if not data:
        return GFMatrix(field, (), cols=d["cols"])
    return GFMatrix.from_rows(field, data)


def code_to_json(code: LinearCode) -> dict:
    out: dict[str, Any] = {
        "field": field_to_json(code.field),
        "n": code.n,
        "k": code.k,
        "H": matrix_to_json(code.H),
        "G": matrix_to_json(code.G),
    }
    if code.locators is not None:
        out["locators"] = [encode_int(a) for a in code.locators]
    if code.multipliers is not None:
        out["multipliers"] = [encode_int(v) for v in code.multipliers]
    if code.meta:
        out["meta"] = code.meta
    return out


def code_from_json(d: dict) -> LinearCode:
    field = field_from_json(d["field"])
    H = matrix_from_json(field, d["H"]) if "H" in d else None
    G = matrix_from_json(field, d["G"]) if "G" in d else None
    locators = tuple(decode_int(a) for a in d["locators"]) if "locators" in d else None
    multipliers = (
        tuple(decode_int(v) for v in d["multipliers"]) if "multipliers" in d else None
    )
    code = make_code(field, H=H, G=G, locators=locators, multipliers=multipliers,
                     meta=d.get("meta"))
    if (code.n, code.k) != (d["n"], d["k"]):
        raise ValueError(
            f"descriptor says [{d['n']},{d['k']}], matrices give [{code.n},{code.k}]"
        )
    return code


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def dumps_pretty(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)
