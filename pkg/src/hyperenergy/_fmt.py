"""Shared text-emission helpers: 17-significant-digit floats for machine
output, 6 for the human format."""

from __future__ import annotations

import json


def g17(value: float) -> str:
    return format(float(value), ".17g")


def g6(value: float) -> str:
    return format(float(value), ".6g")


def json_scalar(value, digits17: bool = True) -> str:
    """One JSON token; floats rendered at full precision, not shortest-repr."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, float):
        return g17(value)
    if isinstance(value, int):
        return str(value)
    return json.dumps(value)


def flat_json(pairs: list[tuple[str, object]]) -> str:
    """A one-level JSON object with deterministic key order."""
    body = ", ".join(f"{json.dumps(k)}: {json_scalar(v)}" for k, v in pairs)
    return "{" + body + "}"
