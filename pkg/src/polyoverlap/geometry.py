"""Exact rational geometry: scalars, points, polygons and predicates.

Coordinates are ``int`` or :class:`fractions.Fraction`; integral values are
kept as ``int`` because Python integer arithmetic is far cheaper than
``Fraction`` arithmetic and the two compare and hash identically.  Nothing in
this package ever touches a float when deciding geometry.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Optional, Sequence, Union

Scalar = Union[int, Fraction]


class GeometryError(ValueError):
    """Base class for rejected geometric input."""


class MalformedInputError(GeometryError):
    """Input that does not describe a valid polygon or scene."""


def scalar(value) -> Scalar:
    """Coerce *value* to an exact rational (``int`` when integral).

    Accepts ints, Fractions, Decimals and strings such as ``"3/4"``.  Floats
    are refused: their binary expansions are exact but almost never what the
    caller meant.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        raise TypeError(f"float coordinate {value!r}: pass a string or Fraction instead")
    f = Fraction(value)
    return f.numerator if f.denominator == 1 else f


class Point(NamedTuple):
    x: Scalar
    y: Scalar


def pt(x, y) -> Point:
    return Point(scalar(x), scalar(y))


class Segment(NamedTuple):
    a: Point
    b: Point


class Orientation(enum.IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


class Location(enum.Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    ON_BOUNDARY = "on_boundary"


def cross(o, a, b) -> Scalar:
    """(a - o) x (b - o)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def orient(a, b, c) -> Orientation:
    d = cross(a, b, c)
    if d > 0:
        return Orientation.COUNTERCLOCKWISE
    if d < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


def _on_segment(a, b, p) -> bool:
    """p is on the closed segment ab, given that a, b, p are collinear."""
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def segments_intersect(a, b, c, d) -> bool:
    """Closed segments ab and cd share at least one point."""
    d1 = cross(a, b, c)
    d2 = cross(a, b, d)
    d3 = cross(c, d, a)
    d4 = cross(c, d, b)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        return True
    return (
        (d1 == 0 and _on_segment(a, b, c))
        or (d2 == 0 and _on_segment(a, b, d))
        or (d3 == 0 and _on_segment(c, d, a))
        or (d4 == 0 and _on_segment(c, d, b))
    )


def segment_intersection(s, t) -> Union[None, Point, Segment]:
    """Intersection of two closed segments.

    Returns ``None`` when they are disjoint, a :class:`Point` when they meet
    in a single point and a :class:`Segment` (endpoints in lexicographic
    order) when they overlap along a positive length.
    """
    a, b = s
    c, d = t
    if not segments_intersect(a, b, c, d):
        return None
    d1 = cross(a, b, c)
    d2 = cross(a, b, d)
    if d1 == 0 and d2 == 0:
        lo = max(min(a, b), min(c, d))
        hi = min(max(a, b), max(c, d))
        lo, hi = pt(*lo), pt(*hi)
        return lo if lo == hi else Segment(lo, hi)
    d3 = cross(c, d, a)
    d4 = cross(c, d, b)
    if d3 == d4:
        # ab is parallel to cd but not collinear with it; an endpoint touch
        # was already excluded by segments_intersect, so this cannot happen.
        raise AssertionError("parallel segments reported as intersecting")
    t_ab = Fraction(d3) / (d3 - d4)
    return pt(a[0] + t_ab * (b[0] - a[0]), a[1] + t_ab * (b[1] - a[1]))


@dataclass(frozen=True)
class Polygon:
    """A closed vertex ring.  Validity (simple, CCW, true corners) is not
    enforced here so that invalid rings can be inspected; see
    :func:`check_polygon`."""

    vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(v if type(v) is Point else pt(*v) for v in self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.vertices)

    def __getitem__(self, i) -> Point:
        return self.vertices[i]

    @property
    def side_count(self) -> int:
        return len(self.vertices)

    def edges(self) -> Iterator[Segment]:
        vs = self.vertices
        for i in range(len(vs)):
            yield Segment(vs[i], vs[(i + 1) % len(vs)])

    def reversed(self) -> "Polygon":
        return Polygon(self.vertices[::-1])

    def translated(self, dx, dy) -> "Polygon":
        dx, dy = scalar(dx), scalar(dy)
        return Polygon([(scalar(v.x + dx), scalar(v.y + dy)) for v in self.vertices])


def signed_area(p: Polygon) -> Scalar:
    vs = p.vertices
    n = len(vs)
    twice = 0
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        twice += a.x * b.y - b.x * a.y
    return scalar(Fraction(twice) / 2)


def ccw(p: Polygon) -> Polygon:
    """Return *p* with counterclockwise orientation."""
    return p.reversed() if signed_area(p) < 0 else p


def simplicity_witness(p: Polygon) -> Optional[tuple[int, int]]:
    """First offending pair of edge indices, or ``None`` if *p* is simple.

    Edge ``i`` runs from vertex ``i`` to vertex ``i + 1``.  Adjacent edges may
    only share their common endpoint; non-adjacent edges may not meet at all.
    """
    vs = p.vertices
    n = len(vs)
    if n < 3:
        raise MalformedInputError(f"a polygon needs at least 3 vertices, got {n}")
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        if a == b:
            return (i, i)
        for j in range(i + 1, n):
            c, d = vs[j], vs[(j + 1) % n]
            if j == i + 1:
                # b == c; reject a fold-back along the common line
                if cross(a, b, d) == 0 and (b.x - a.x) * (d.x - b.x) + (b.y - a.y) * (d.y - b.y) < 0:
                    return (i, j)
            elif i == 0 and j == n - 1:
                # d == a
                if cross(c, a, b) == 0 and (a.x - c.x) * (b.x - a.x) + (a.y - c.y) * (b.y - a.y) < 0:
                    return (i, j)
            elif segments_intersect(a, b, c, d):
                return (i, j)
    return None


def is_simple(p: Polygon) -> bool:
    return simplicity_witness(p) is None


def collinear_corners(p: Polygon) -> list[int]:
    """Indices of vertices whose two incident edges are collinear."""
    vs = p.vertices
    n = len(vs)
    return [i for i in range(n) if cross(vs[i - 1], vs[i], vs[(i + 1) % n]) == 0]


def check_polygon(p: Polygon, name: str = "polygon") -> None:
    """Raise :class:`MalformedInputError` unless *p* is a simple CCW ring of
    true corners."""
    if len(p) < 3:
        raise MalformedInputError(f"{name}: a polygon needs at least 3 vertices, got {len(p)}")
    w = simplicity_witness(p)
    if w is not None:
        raise MalformedInputError(f"{name}: not simple, edges {w[0]} and {w[1]} meet")
    bad = collinear_corners(p)
    if bad:
        raise MalformedInputError(f"{name}: vertex {bad[0]} is not a corner (collinear neighbours)")
    if signed_area(p) <= 0:
        raise MalformedInputError(f"{name}: vertices must be in counterclockwise order")


def is_convex(p: Polygon) -> bool:
    """Strictly convex, counterclockwise and simple."""
    vs = p.vertices
    n = len(vs)
    if any(cross(vs[i - 1], vs[i], vs[(i + 1) % n]) <= 0 for i in range(n)):
        return False
    return is_simple(p)


def point_in_polygon(q, p: Polygon) -> Location:
    """Exact location of *q* relative to the closed polygon *p* (winding rule)."""
    vs = p.vertices
    n = len(vs)
    qx, qy = q[0], q[1]
    winding = 0
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        o = (b.x - a.x) * (qy - a.y) - (b.y - a.y) * (qx - a.x)
        if o == 0 and _on_segment(a, b, q):
            return Location.ON_BOUNDARY
        if a.y <= qy:
            if b.y > qy and o > 0:
                winding += 1
        elif b.y <= qy and o < 0:
            winding -= 1
    return Location.INSIDE if winding else Location.OUTSIDE


# --- general position -------------------------------------------------------

SideRef = tuple  # ("P", side index) or ("Q", side index)


@dataclass(frozen=True)
class Violation:
    """A configuration excluded by general position.

    ``kind`` is one of ``"coincident_lines"`` (two side lines are the same
    line), ``"vertex_on_side"`` (a vertex of one polygon lies on a closed side
    of the other) or ``"concurrent_lines"`` (three or more side lines pass
    through ``point``).
    """

    kind: str
    sides: tuple
    point: Optional[Point] = None

    def describe(self) -> str:
        refs = ", ".join(f"{o}{i}" for o, i in self.sides)
        where = f" at ({self.point.x}, {self.point.y})" if self.point is not None else ""
        return f"{self.kind}: {refs}{where}"


def common_scale(*polygons: Polygon) -> int:
    """Least common multiple of every coordinate denominator."""
    dens = {1}
    for poly in polygons:
        for v in poly.vertices:
            if type(v.x) is not int:
                dens.add(v.x.denominator)
            if type(v.y) is not int:
                dens.add(v.y.denominator)
    return math.lcm(*dens)


def scaled_ints(p: Polygon, scale: int) -> list[tuple[int, int]]:
    if scale == 1:
        return [(int(v.x), int(v.y)) for v in p.vertices]
    return [(int(v.x * scale), int(v.y * scale)) for v in p.vertices]


def _line(a, b) -> tuple[int, int, int]:
    """Primitive integer coefficients (A, B, C) of the line Ax + By + C = 0
    through integer points a != b, normalised so the key is unique."""
    A = b[1] - a[1]
    B = a[0] - b[0]
    C = -(A * a[0] + B * a[1])
    g = math.gcd(math.gcd(A, B), C)
    A, B, C = A // g, B // g, C // g
    if A < 0 or (A == 0 and B < 0):
        A, B, C = -A, -B, -C
    return A, B, C


def side_lines(Pi: Sequence, Qi: Sequence) -> list[tuple[SideRef, tuple[int, int, int]]]:
    out = []
    for name, ring in (("P", Pi), ("Q", Qi)):
        n = len(ring)
        for i in range(n):
            out.append(((name, i), _line(ring[i], ring[(i + 1) % n])))
    return out


def general_position_scaled(Pi: Sequence, Qi: Sequence, scale: int = 1) -> list[Violation]:
    """:func:`general_position` on integer rings already multiplied by *scale*."""
    lines = side_lines(Pi, Qi)
    out: list[Violation] = []

    by_key: dict = {}
    for ref, key in lines:
        by_key.setdefault(key, []).append(ref)
    for refs in by_key.values():
        if len(refs) > 1:
            out.append(Violation("coincident_lines", tuple(refs)))

    for name, ring, other_name, other in (("P", Pi, "Q", Qi), ("Q", Qi, "P", Pi)):
        m = len(other)
        for vi, v in enumerate(ring):
            for j in range(m):
                c, d = other[j], other[(j + 1) % m]
                if cross(c, d, v) == 0 and _on_segment(c, d, v):
                    out.append(
                        Violation(
                            "vertex_on_side",
                            ((name, (vi - 1) % len(ring)), (name, vi), (other_name, j)),
                            Point(scalar(Fraction(v[0], scale)), scalar(Fraction(v[1], scale))),
                        )
                    )

    meets: dict = {}
    count = len(lines)
    for i in range(count):
        ri, (a1, b1, c1) = lines[i]
        for j in range(i + 1, count):
            rj, (a2, b2, c2) = lines[j]
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            X = b1 * c2 - b2 * c1
            Y = c1 * a2 - c2 * a1
            if det < 0:
                det, X, Y = -det, -X, -Y
            g = math.gcd(math.gcd(X, Y), det)
            key = (X // g, Y // g, det // g)
            hit = meets.get(key)
            if hit is None:
                meets[key] = {ri, rj}
            else:
                hit.add(ri)
                hit.add(rj)
    for (X, Y, W), refs in meets.items():
        if len(refs) >= 3:
            p = Point(scalar(Fraction(X, W * scale)), scalar(Fraction(Y, W * scale)))
            out.append(Violation("concurrent_lines", tuple(sorted(refs)), p))

    order = {"coincident_lines": 0, "vertex_on_side": 1, "concurrent_lines": 2}
    out.sort(key=lambda v: (order[v.kind], v.sides, (v.point.x, v.point.y) if v.point else ()))
    return out


def general_position(P: Polygon, Q: Polygon) -> list[Violation]:
    """Every degeneracy among the ``n + m`` full side lines of *P* and *Q*.

    An empty list certifies that no three side lines share a point, no two
    side lines coincide and no vertex lies on a side of the other polygon.
    """
    scale = common_scale(P, Q)
    return general_position_scaled(scaled_ints(P, scale), scaled_ints(Q, scale), scale)
