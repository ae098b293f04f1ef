"""Broadcast document serialization.

A document is one flat JSON object with keys in fixed order (m, n, t, r,
towers, metadata), towers sorted lexicographically, UTF-8, one line. The
byte-exact output makes golden-file tests possible; parse(serialize(d)) == d.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .grid import Coord, TowerSet

_METADATA_KEYS = ("anchor", "raw_count", "shear", "generator", "tool_version")


class DocumentError(ValueError):
    """The input is not a well-formed broadcast document."""


@dataclass(frozen=True)
class BroadcastDocument:
    m: int
    n: int
    t: int
    r: int
    towers: TowerSet
    metadata: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        for name in ("m", "n", "t", "r"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise DocumentError(f"{name} must be a positive integer, got {value!r}")
        unknown = set(self.metadata) - set(_METADATA_KEYS)
        if unknown:
            raise DocumentError(f"unknown metadata keys: {sorted(unknown)}")


def serialize_document(doc: BroadcastDocument) -> str:
    payload: dict = {
        "m": doc.m,
        "n": doc.n,
        "t": doc.t,
        "r": doc.r,
        "towers": [[c.x, c.y] for c in doc.towers],
    }
    if doc.metadata:
        meta = {}
        for key in _METADATA_KEYS:
            if key in doc.metadata:
                value = doc.metadata[key]
                meta[key] = list(value) if key == "anchor" else value
        payload["metadata"] = meta
    return json.dumps(payload, separators=(",", ":")) + "\n"


def _int_pair(value, what: str) -> tuple[int, int]:
    if (
        not isinstance(value, list)
        or len(value) != 2
        or not all(isinstance(c, int) and not isinstance(c, bool) for c in value)
    ):
        raise DocumentError(f"{what} must be a pair of integers, got {value!r}")
    return value[0], value[1]


def parse_document(text: str) -> BroadcastDocument:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise DocumentError("document must be a JSON object")
    required = {"m", "n", "t", "r", "towers"}
    missing = required - set(payload)
    if missing:
        raise DocumentError(f"missing keys: {sorted(missing)}")
    extra = set(payload) - required - {"metadata"}
    if extra:
        raise DocumentError(f"unknown keys: {sorted(extra)}")
    for name in ("m", "n", "t", "r"):
        value = payload[name]
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise DocumentError(f"{name} must be a positive integer, got {value!r}")
    if not isinstance(payload["towers"], list):
        raise DocumentError("towers must be a list of [x, y] pairs")
    towers = TowerSet(Coord(*_int_pair(pair, "tower")) for pair in payload["towers"])

    metadata: dict = {}
    raw_meta = payload.get("metadata", {})
    if not isinstance(raw_meta, dict):
        raise DocumentError("metadata must be an object")
    for key, value in raw_meta.items():
        if key not in _METADATA_KEYS:
            raise DocumentError(f"unknown metadata key: {key!r}")
        metadata[key] = _int_pair(value, "metadata anchor") if key == "anchor" else value
    return BroadcastDocument(
        m=payload["m"], n=payload["n"], t=payload["t"], r=payload["r"],
        towers=towers, metadata=metadata,
    )


def load_document(path: str) -> BroadcastDocument:
    with open(path, encoding="utf-8") as handle:
        return parse_document(handle.read())
