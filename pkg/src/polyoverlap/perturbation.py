"""Push side lines apart until a scene is in general position.

Each step translates one side line of ``P`` or ``Q`` perpendicular to
itself by a dyadic offset and recomputes the two vertices on it as
intersections with the neighbouring side lines, so both polygons keep their
side counts.  A step is accepted only if

* it moves the line less than the distance to every point where two other
  side lines meet,
* the total amount of degeneracy strictly drops, and
* the number of open overlaps does not drop.

The returned certificate records every step and can be replayed by
:func:`verify_certificate`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .formats import parse_scalar, polygon_from_json, polygon_to_json, scene_to_dict
from .geometry import (
    GeometryError,
    MalformedInputError,
    Point,
    Polygon,
    Violation,
    ccw,
    check_polygon,
    general_position,
    simplicity_witness,
)
from .oracle import components
from .overlap import count_components
from .scene import Scene

MAX_EXTRA_HALVINGS = 40


class PerturbationError(GeometryError):
    """No admissible offset was found for a violation."""

    def __init__(self, violation: Violation, message: str = ""):
        self.violation = violation
        super().__init__(message or f"cannot resolve {violation.describe()}")


@dataclass(frozen=True)
class Deformation:
    polygon: str  # "P" or "Q"
    side: int
    offset: Fraction  # along the outward normal; negative moves inward

    def to_json(self) -> dict:
        return {"polygon": self.polygon, "side": self.side, "offset": str(self.offset)}

    @classmethod
    def from_json(cls, d: dict) -> "Deformation":
        return cls(d["polygon"], int(d["side"]), Fraction(parse_scalar(d["offset"])))


@dataclass(frozen=True)
class DeformationCertificate:
    before_P: Polygon
    before_Q: Polygon
    after: Scene
    steps: tuple[Deformation, ...]
    count_before: int
    count_after: int

    def to_json(self) -> dict:
        return {
            "before": {
                "P": polygon_to_json(self.before_P),
                "Q": polygon_to_json(self.before_Q),
            },
            "after": scene_to_dict(self.after),
            "steps": [st.to_json() for st in self.steps],
            "count_before": self.count_before,
            "count_after": self.count_after,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1) + "\n"

    @classmethod
    def from_json(cls, d: dict) -> "DeformationCertificate":
        return cls(
            polygon_from_json(d["before"]["P"]),
            polygon_from_json(d["before"]["Q"]),
            Scene(polygon_from_json(d["after"]["P"]), polygon_from_json(d["after"]["Q"])),
            tuple(Deformation.from_json(x) for x in d["steps"]),
            int(d["count_before"]),
            int(d["count_after"]),
        )


def degeneracy_measure(violations) -> int:
    """Sum of (lines - 2) over concurrences plus coincident line pairs."""
    total = 0
    for v in violations:
        k = len(v.sides)
        if v.kind == "concurrent_lines":
            total += k - 2
        elif v.kind == "coincident_lines":
            total += k * (k - 1) // 2
    return total


def _normal(a: Point, b: Point) -> tuple:
    """Outward normal of the CCW side a->b, scaled so its larger component is 1."""
    dx, dy = b.x - a.x, b.y - a.y
    big = max(abs(dx), abs(dy))
    return Fraction(dy) / big, Fraction(-dx) / big


def _meet(p, d, q, e) -> tuple:
    """Intersection of the line through p along d with the line through q along e."""
    den = d[0] * e[1] - d[1] * e[0]
    t = Fraction((q[0] - p[0]) * e[1] - (q[1] - p[1]) * e[0]) / den
    return p[0] + t * d[0], p[1] + t * d[1]


def move_side(poly: Polygon, side: int, offset) -> Polygon:
    """Translate side ``side`` (from vertex ``side`` to ``side + 1``) along its
    outward normal by ``offset`` and re-intersect with its neighbours."""
    vs = poly.vertices
    k = len(vs)
    a, b = vs[side], vs[(side + 1) % k]
    nx, ny = _normal(a, b)
    d = (b.x - a.x, b.y - a.y)
    p = (a.x + offset * nx, a.y + offset * ny)
    prev_a = vs[side - 1]
    next_b = vs[(side + 2) % k]
    new_a = _meet(p, d, prev_a, (a.x - prev_a.x, a.y - prev_a.y))
    new_b = _meet(p, d, b, (next_b.x - b.x, next_b.y - b.y))
    out = list(vs)
    out[side] = new_a
    out[(side + 1) % k] = new_b
    return Polygon(out)


def _line_of(poly: Polygon, i: int):
    a, b = poly[i], poly[(i + 1) % len(poly)]
    A = b.y - a.y
    B = a.x - b.x
    return A, B, -(A * a.x + B * a.y)


def offset_limit(P: Polygon, Q: Polygon, target: tuple[str, int]) -> Fraction:
    """Squared distance from the target side line to the nearest point where
    two other side lines meet (points on the line itself are ignored)."""
    lines = [(("P", i), _line_of(P, i)) for i in range(len(P))]
    lines += [(("Q", i), _line_of(Q, i)) for i in range(len(Q))]
    A0, B0, C0 = dict(lines)[target]
    norm = A0 * A0 + B0 * B0
    others = [ln for ref, ln in lines if ref != target]
    best: Optional[Fraction] = None
    for i in range(len(others)):
        a1, b1, c1 = others[i]
        for j in range(i + 1, len(others)):
            a2, b2, c2 = others[j]
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            x = Fraction(b1 * c2 - b2 * c1) / det
            y = Fraction(c1 * a2 - c2 * a1) / det
            s = A0 * x + B0 * y + C0
            if s == 0:
                continue
            d2 = s * s / norm
            if best is None or d2 < best:
                best = d2
    return best if best is not None else Fraction(1)


def width_limit(P: Polygon, Q: Polygon, target: tuple[str, int]) -> Optional[Fraction]:
    """Smallest, over open overlaps, of the squared largest distance of the
    overlap's vertices from the target line.  ``None`` without overlaps."""
    A, B, C = _line_of(P if target[0] == "P" else Q, target[1])
    norm = A * A + B * B
    best = None
    for cls in components(P, Q):
        far = max((A * v[0] + B * v[1] + C) ** 2 for cell in cls for v in cell)
        w = Fraction(far) / norm
        if best is None or w < best:
            best = w
    return best


def _open_count(P: Polygon, Q: Polygon) -> int:
    return len(components(P, Q))


def _step_len2(poly: Polygon, side: int, offset) -> Fraction:
    nx, ny = _normal(poly[side], poly[(side + 1) % len(poly)])
    return offset * offset * (nx * nx + ny * ny)


def _apply(P: Polygon, Q: Polygon, step: Deformation) -> tuple[Polygon, Polygon]:
    if step.polygon == "P":
        return move_side(P, step.side, step.offset), Q
    return P, move_side(Q, step.side, step.offset)


def _valid(poly: Polygon) -> bool:
    try:
        check_polygon(poly)
    except GeometryError:
        return False
    return True


def step_limit(P: Polygon, Q: Polygon, ref: tuple[str, int]) -> Fraction:
    """Squared length every step on side *ref* must stay below."""
    limit = offset_limit(P, Q, ref)
    width = width_limit(P, Q, ref)
    return limit if width is None or width >= limit else width


def _try_line(P, Q, ref, count, measure) -> Optional[tuple[Deformation, Polygon, Polygon, int, list]]:
    poly = P if ref[0] == "P" else Q
    limit = step_limit(P, Q, ref)
    n2 = _step_len2(poly, ref[1], Fraction(1))
    k = 0
    while n2 / Fraction(4) ** k >= limit:
        k += 1
    for extra in range(MAX_EXTRA_HALVINGS):
        delta = Fraction(1, 2 ** (k + extra))
        for offset in (delta, -delta):
            step = Deformation(ref[0], ref[1], offset)
            P2, Q2 = _apply(P, Q, step)
            if not (_valid(P2) and _valid(Q2)):
                continue
            vio = general_position(P2, Q2)
            if degeneracy_measure(vio) >= measure:
                continue
            c2 = _open_count(P2, Q2)
            if c2 < count:
                continue
            return step, P2, Q2, c2, vio
    return None


def _prepare(P, Q) -> tuple[Polygon, Polygon]:
    P = P if isinstance(P, Polygon) else Polygon(P)
    Q = Q if isinstance(Q, Polygon) else Polygon(Q)
    for name, poly in (("P", P), ("Q", Q)):
        if len(poly) < 3 or simplicity_witness(poly) is not None:
            raise MalformedInputError(f"{name} is not a simple polygon")
    P, Q = ccw(P), ccw(Q)
    check_polygon(P, "P")
    check_polygon(Q, "Q")
    return P, Q


def resolve_degeneracies(P, Q) -> DeformationCertificate:
    """Move side lines one at a time until no degeneracy remains.

    Raises :class:`PerturbationError` carrying the violation if no admissible
    offset exists for any of its lines.
    """
    P, Q = _prepare(P, Q)
    before_P, before_Q = P, Q
    count = count_before = _open_count(P, Q)
    vio = general_position(P, Q)
    steps: list[Deformation] = []
    while vio:
        measure = degeneracy_measure(vio)
        target = vio[0]
        found = None
        for ref in sorted(set(target.sides), reverse=True):
            found = _try_line(P, Q, ref, count, measure)
            if found:
                break
        if found is None:
            raise PerturbationError(target)
        step, P, Q, count, vio = found
        steps.append(step)
    after = Scene(P, Q)
    return DeformationCertificate(
        before_P, before_Q, after, tuple(steps), count_before, count_components(after)
    )


def verify_certificate(c: DeformationCertificate) -> bool:
    """Replay every step and re-check every claim the certificate makes."""
    try:
        P, Q = _prepare(c.before_P, c.before_Q)
    except GeometryError:
        return False
    if (P, Q) != (c.before_P, c.before_Q):
        return False
    count = _open_count(P, Q)
    if count != c.count_before:
        return False
    for step in c.steps:
        if step.polygon not in ("P", "Q"):
            return False
        poly = P if step.polygon == "P" else Q
        if not 0 <= step.side < len(poly) or step.offset == 0:
            return False
        ref = (step.polygon, step.side)
        if _step_len2(poly, step.side, step.offset) >= step_limit(P, Q, ref):
            return False
        P, Q = _apply(P, Q, step)
        if not (_valid(P) and _valid(Q)):
            return False
        nxt = _open_count(P, Q)
        if nxt < count:
            return False
        count = nxt
    if (P, Q) != (c.after.P, c.after.Q):
        return False
    if not c.after.general_position:
        return False
    return count_components(c.after) == c.count_after >= c.count_before
