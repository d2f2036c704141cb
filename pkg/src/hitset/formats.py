"""File formats.

instance: one JSON document
    {"shape": {"kind": "disk"} | {"kind": "kgon", "k": K[, "reflected": true]},
     "points": [[x, y], ...]}
stream: line-delimited JSON, one object per line: {"center": [x, y]}
report/transcript: one JSON document.

Streams are line-delimited on purpose: one line per online arrival.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import ParseError
from .geometry import PlacedObject, Point, Shape, reflect


def shape_to_dict(shape: Shape) -> dict:
    if shape.is_disk:
        return {"kind": "disk"}
    d: dict[str, Any] = {"kind": "kgon", "k": shape.k}
    if shape.reflected:
        d["reflected"] = True
    return d


def shape_from_dict(d: Any, path: str | None = None) -> Shape:
    if not isinstance(d, dict) or "kind" not in d:
        raise ParseError("shape must be an object with a 'kind' field", path)
    kind = d["kind"]
    if kind == "disk":
        return Shape.disk()
    if kind == "kgon":
        k = d.get("k")
        if not isinstance(k, int) or k < 4:
            raise ParseError(f"kgon requires integer k >= 4, got {k!r}", path)
        shape = Shape.kgon(k)
        if d.get("reflected"):
            shape = reflect(shape)
        return shape
    raise ParseError(f"unknown shape kind {kind!r}", path)


def _point_from(v: Any, path: str, line: int | None = None) -> Point:
    if (not isinstance(v, (list, tuple)) or len(v) != 2
            or not all(isinstance(c, (int, float)) for c in v)):
        raise ParseError(f"expected [x, y], got {v!r}", path, line)
    return Point(float(v[0]), float(v[1]))


def load_instance(path: str) -> tuple[Shape, list[Point]]:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, path, e.lineno) from e
    except OSError as e:
        raise ParseError(str(e), path) from e
    if not isinstance(doc, dict) or "points" not in doc or "shape" not in doc:
        raise ParseError("instance must have 'shape' and 'points'", path)
    shape = shape_from_dict(doc["shape"], path)
    points = [_point_from(v, path) for v in doc["points"]]
    return shape, points


def save_instance(path: str, shape: Shape, points: list[Point]) -> None:
    doc = {"shape": shape_to_dict(shape),
           "points": [[p[0], p[1]] for p in points]}
    with open(path, "w") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def load_stream(path: str, shape: Shape) -> list[PlacedObject]:
    objects = []
    try:
        with open(path) as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    doc = json.loads(line)
                except json.JSONDecodeError as e:
                    raise ParseError(e.msg, path, lineno) from e
                if not isinstance(doc, dict) or "center" not in doc:
                    raise ParseError("stream line must be {\"center\": [x, y]}",
                                     path, lineno)
                center = _point_from(doc["center"], path, lineno)
                objects.append(PlacedObject(shape=shape, center=center))
    except OSError as e:
        raise ParseError(str(e), path) from e
    return objects


def save_stream(path: str, objects: list[PlacedObject]) -> None:
    with open(path, "w") as fh:
        for obj in objects:
            json.dump({"center": [obj.center[0], obj.center[1]]}, fh)
            fh.write("\n")


def save_json(path: str, doc: dict) -> None:
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, path, e.lineno) from e
    except OSError as e:
        raise ParseError(str(e), path) from e
