"""Deterministic rendering of reports.

Identical inputs must produce byte-identical output, so floats are emitted
in Python's shortest round-trip representation (the ``repr`` of a float),
key order follows model field order, and non-finite values are rejected
rather than smuggled through.
"""

from __future__ import annotations

import json
from typing import Any, Iterable, Mapping

from pydantic import BaseModel

__all__ = ["format_float", "render_json", "render_csv_grid"]

SCHEMA_VERSION = 1


def format_float(value: float) -> str:
    """Shortest decimal string that round-trips to the same double."""
    return repr(float(value))


def render_json(payload: BaseModel | Mapping[str, Any]) -> str:
    data = payload.model_dump(by_alias=True) if isinstance(payload, BaseModel) else payload
    return json.dumps(data, indent=2, allow_nan=False) + "\n"


def render_csv_grid(
    metadata: Mapping[str, Any], rows: Iterable[tuple[float, float, float]]
) -> str:
    """CSV with the grid metadata in leading comment lines, then the
    ``coord_a,coord_b,w`` header and one row per grid node."""
    lines = [f"# {key}={_csv_value(value)}" for key, value in metadata.items()]
    lines.append("coord_a,coord_b,w")
    for a, b, w in rows:
        lines.append(f"{format_float(a)},{format_float(b)},{format_float(w)}")
    return "\n".join(lines) + "\n"


def _csv_value(value: Any) -> str:
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, Mapping):
        return ";".join(f"{k}:{_csv_value(v)}" for k, v in value.items()) or "none"
    return str(value)
