"""JSON in and out.

Integer matrices are written as arrays of decimal strings so that large
entries survive any JSON reader; readers accept either strings or numbers.
Output is deterministic: sorted keys, one line per document.
"""

from __future__ import annotations

import json
from typing import Any

from .graded import GradedPresentation
from .toric import Fan


def matrix_out(M) -> list[list[str]]:
    return [[str(int(x)) for x in row] for row in M]


def matrix_in(data) -> list[list[int]]:
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ValueError("a matrix is a JSON array of arrays")
    try:
        return [[int(x) for x in row] for row in data]
    except (TypeError, ValueError) as exc:
        raise ValueError(f"matrix entries must be integers or decimal strings: {exc}") from exc


def vector_in(data) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in data)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"bad integer vector {data!r}") from exc


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "), ensure_ascii=True)


def presentation_in(data) -> GradedPresentation:
    if not isinstance(data, dict) or "Q" not in data:
        raise ValueError("a presentation needs a 'Q' entry")
    rels = data.get("relations", [])
    if not isinstance(rels, list):
        raise ValueError("'relations' must be a list")
    fixed = dict(data)
    fixed["Q"] = matrix_in(data["Q"])
    return GradedPresentation.from_json(fixed)


def presentation_out(pres: GradedPresentation) -> dict:
    out = pres.to_json()
    out["Q"] = matrix_out(pres.Q)
    return out


def fan_in(data) -> Fan:
    if not isinstance(data, dict) or "rays" not in data or "max_cones" not in data:
        raise ValueError("a fan needs 'rays' and 'max_cones'")
    rays = matrix_in(data["rays"])
    cones = matrix_in(data["max_cones"])
    return Fan(rays, cones, data.get("lattice_rank"))


def load(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
