"""The scene text format.

One JSON document per scene::

    {"P": [["0", "0"], ["4", "2"], ...], "Q": [["-14/5", "3/2"], ...]}

Coordinates are strings ``"num/den"`` in lowest terms (``"num"`` when
integral); bare JSON integers are accepted on input.  Printing a parsed
document reproduces its canonical form exactly.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .geometry import MalformedInputError, Point, Polygon, ccw, pt
from .scene import Scene


def format_scalar(v) -> str:
    return str(v)


def format_point(p: Point) -> list[str]:
    return [format_scalar(p.x), format_scalar(p.y)]


def parse_scalar(v):
    if isinstance(v, bool) or isinstance(v, float):
        raise MalformedInputError(f"coordinate {v!r} must be an integer or a 'num/den' string")
    if isinstance(v, int):
        return v
    if not isinstance(v, str):
        raise MalformedInputError(f"coordinate {v!r} must be an integer or a 'num/den' string")
    try:
        f = Fraction(v.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInputError(f"bad coordinate {v!r}") from exc
    if "." in v or "e" in v.lower():
        raise MalformedInputError(f"coordinate {v!r} must be written as 'num/den'")
    return f.numerator if f.denominator == 1 else f


def polygon_to_json(p: Polygon) -> list:
    return [format_point(v) for v in p.vertices]


def polygon_from_json(data) -> Polygon:
    if not isinstance(data, list):
        raise MalformedInputError("a polygon is a list of [x, y] pairs")
    pts = []
    for item in data:
        if not isinstance(item, list) or len(item) != 2:
            raise MalformedInputError(f"vertex {item!r} is not an [x, y] pair")
        pts.append(pt(parse_scalar(item[0]), parse_scalar(item[1])))
    return Polygon(pts)


def scene_to_dict(s: Scene) -> dict:
    return {"P": polygon_to_json(s.P), "Q": polygon_to_json(s.Q)}


def dumps_scene(s: Scene) -> str:
    return json.dumps(scene_to_dict(s), indent=1) + "\n"


def polygons_from_dict(data) -> tuple[Polygon, Polygon]:
    """Parse both rings, reorienting clockwise input to counterclockwise."""
    if not isinstance(data, dict) or "P" not in data or "Q" not in data:
        raise MalformedInputError('a scene document needs "P" and "Q" keys')
    P = polygon_from_json(data["P"])
    Q = polygon_from_json(data["Q"])
    if len(P) < 3 or len(Q) < 3:
        raise MalformedInputError("each polygon needs at least 3 vertices")
    return ccw(P), ccw(Q)


def loads_scene(text: str) -> Scene:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"not valid JSON: {exc}") from exc
    P, Q = polygons_from_dict(data)
    return Scene(P, Q)


def read_scene(path) -> Scene:
    with open(path, encoding="utf-8") as fh:
        return loads_scene(fh.read())


def write_scene(s: Scene, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_scene(s))
