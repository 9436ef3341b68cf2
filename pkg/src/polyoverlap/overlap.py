"""Overlaps: connected components of the intersection of two open polygonal regions.

The engine builds the planar subdivision induced by the two boundary rings
(naive all-pairs crossing search, then face walking) and reads the overlaps
off as the faces lying inside both polygons.

All work happens on integer coordinates: the scene is multiplied by the
common denominator of its vertices, and crossing points are carried in
homogeneous form ``(X, Y, W)`` with ``W > 0``.  In general position every
crossing is proper, so each crossing vertex has exactly four incident
half-edges and the angular order around it follows from one cross product.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .geometry import GeometryError, Point, Polygon, signed_area
from .scene import Scene


class EngineInvariantError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class InapplicableInputError(GeometryError):
    """A check was asked about an object outside its precondition."""


@dataclass(frozen=True)
class EdgeProvenance:
    origin: str  # "P" or "Q"
    side: int


@dataclass(frozen=True)
class Overlap:
    boundary: Polygon
    provenance: tuple
    contains_vertex_of_p: bool
    contains_vertex_of_q: bool

    @property
    def side_count(self) -> int:
        return len(self.boundary)

    @property
    def vertex_free(self) -> bool:
        return not (self.contains_vertex_of_p or self.contains_vertex_of_q)

    def to_json(self) -> dict:
        from .formats import format_point

        return {
            "boundary": [format_point(v) for v in self.boundary],
            "provenance": [{"origin": e.origin, "side": e.side} for e in self.provenance],
        }


@dataclass(frozen=True)
class HalfEdge:
    origin: int  # vertex index
    twin: int
    next: int
    face: int
    provenance: EdgeProvenance
    forward: bool  # runs along its polygon's CCW orientation


@dataclass(frozen=True)
class Face:
    boundaries: tuple  # tuples of half-edge ids; first is the outer cycle unless unbounded
    inside_p: bool
    inside_q: bool
    unbounded: bool = False


@dataclass(frozen=True)
class Arrangement:
    vertices: tuple  # Points: P vertices, then Q vertices, then crossings
    half_edges: tuple
    faces: tuple
    n: int
    m: int

    @property
    def crossing_count(self) -> int:
        return len(self.vertices) - self.n - self.m

    def component_count(self) -> int:
        """Connected components of the union of the two boundary rings."""
        return 1 if self.crossing_count else 2

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.half_edges) // 2 + len(self.faces)

    def face_cycle(self, h: int) -> list[int]:
        out = [h]
        cur = self.half_edges[h].next
        while cur != h:
            out.append(cur)
            cur = self.half_edges[cur].next
        return out


# --- integer core -------------------------------------------------------------


class _Walk:
    """Face walk of the boundary arrangement on integer coordinates."""

    __slots__ = (
        "Pi", "Qi", "xs", "EP", "EQ", "posP", "posQ", "sideP", "sideQ",
        "NP", "NQ", "nxt", "cycles", "outer", "flags",
    )

    def __init__(self, scene: Scene):
        Pi, Qi = scene._ints
        self.Pi, self.Qi = Pi, Qi
        n, m = len(Pi), len(Qi)

        qbox = []
        for j in range(m):
            c, e = Qi[j], Qi[(j + 1) % m]
            qbox.append((min(c[0], e[0]), max(c[0], e[0]), min(c[1], e[1]), max(c[1], e[1])))

        xs = []  # crossings: (X, Y, W, turn) with turn = sign of P-dir x Q-dir
        onP = [[] for _ in range(n)]
        onQ = [[] for _ in range(m)]
        for i in range(n):
            ax, ay = Pi[i]
            bx, by = Pi[(i + 1) % n]
            dx, dy = bx - ax, by - ay
            lox, hix = (ax, bx) if ax < bx else (bx, ax)
            loy, hiy = (ay, by) if ay < by else (by, ay)
            for j in range(m):
                qx0, qx1, qy0, qy1 = qbox[j]
                if qx1 < lox or qx0 > hix or qy1 < loy or qy0 > hiy:
                    continue
                cx, cy = Qi[j]
                ex, ey = Qi[(j + 1) % m]
                d1 = dx * (cy - ay) - dy * (cx - ax)
                d2 = dx * (ey - ay) - dy * (ex - ax)
                if d1 == 0 or d2 == 0:
                    raise EngineInvariantError("Q vertex on a P side line in a general-position scene")
                if (d1 > 0) == (d2 > 0):
                    continue
                fx, fy = ex - cx, ey - cy
                d3 = fx * (ay - cy) - fy * (ax - cx)
                d4 = fx * (by - cy) - fy * (bx - cx)
                if d3 == 0 or d4 == 0:
                    raise EngineInvariantError("P vertex on a Q side line in a general-position scene")
                if (d3 > 0) == (d4 > 0):
                    continue
                W = d3 - d4
                X = ax * W + d3 * dx
                Y = ay * W + d3 * dy
                if W < 0:
                    W, X, Y = -W, -X, -Y
                k = len(xs)
                xs.append((X, Y, W, 1 if dx * fy - dy * fx > 0 else -1))
                onP[i].append((Fraction(d3, d3 - d4), k))
                onQ[j].append((Fraction(d1, d1 - d2), k))
        self.xs = xs

        # event rings: vertex i is encoded as ~i, crossing k as k
        EP, sideP = [], []
        EQ, sideQ = [], []
        posP = [0] * len(xs)
        posQ = [0] * len(xs)
        for ring, on, E, side, pos in ((Pi, onP, EP, sideP, posP), (Qi, onQ, EQ, sideQ, posQ)):
            for i in range(len(ring)):
                E.append(~i)
                side.append(i)
                hits = on[i]
                if len(hits) > 1:
                    hits.sort()
                for _, k in hits:
                    pos[k] = len(E)
                    E.append(k)
                    side.append(i)
        self.EP, self.EQ, self.posP, self.posQ = EP, EQ, posP, posQ
        self.sideP, self.sideQ = sideP, sideQ
        NP, NQ = len(EP), len(EQ)
        self.NP, self.NQ = NP, NQ

        # half-edge ids: P piece k -> 2k (forward) / 2k+1 (backward);
        # Q piece k -> OQ + 2k / OQ + 2k + 1.
        OQ = 2 * NP
        nxt = [0] * (2 * (NP + NQ))
        for k in range(NP):
            end = EP[(k + 1) % NP]
            if end < 0:
                nxt[2 * k] = 2 * ((k + 1) % NP)
            elif xs[end][3] > 0:
                nxt[2 * k] = OQ + 2 * posQ[end]
            else:
                nxt[2 * k] = OQ + 2 * ((posQ[end] - 1) % NQ) + 1
            start = EP[k]
            if start < 0:
                nxt[2 * k + 1] = 2 * ((k - 1) % NP) + 1
            elif xs[start][3] > 0:
                nxt[2 * k + 1] = OQ + 2 * ((posQ[start] - 1) % NQ) + 1
            else:
                nxt[2 * k + 1] = OQ + 2 * posQ[start]
        for k in range(NQ):
            end = EQ[(k + 1) % NQ]
            if end < 0:
                nxt[OQ + 2 * k] = OQ + 2 * ((k + 1) % NQ)
            elif xs[end][3] > 0:
                nxt[OQ + 2 * k] = 2 * ((posP[end] - 1) % NP) + 1
            else:
                nxt[OQ + 2 * k] = 2 * posP[end]
            start = EQ[k]
            if start < 0:
                nxt[OQ + 2 * k + 1] = OQ + 2 * ((k - 1) % NQ) + 1
            elif xs[start][3] > 0:
                nxt[OQ + 2 * k + 1] = 2 * posP[start]
            else:
                nxt[OQ + 2 * k + 1] = 2 * ((posP[start] - 1) % NP) + 1
        self.nxt = nxt

        seen = [False] * len(nxt)
        cycles = []
        for h in range(len(nxt)):
            if seen[h]:
                continue
            cyc = []
            cur = h
            while not seen[cur]:
                seen[cur] = True
                cyc.append(cur)
                cur = nxt[cur]
            if cur != h:
                raise EngineInvariantError("half-edge successor map is not a permutation")
            cycles.append(cyc)
        self.cycles = cycles
        self.outer = self._outer_cycles()
        self.flags = [self._flags(c) for c in cycles]

    # -- helpers ---------------------------------------------------------------

    def piece(self, h: int) -> tuple[str, int, bool]:
        """(polygon, piece index, forward) of half-edge *h*."""
        OQ = 2 * self.NP
        if h < OQ:
            return "P", h >> 1, not (h & 1)
        return "Q", (h - OQ) >> 1, not ((h - OQ) & 1)

    def event_point(self, name: str, e: int) -> tuple[int, int, int]:
        if e < 0:
            x, y = (self.Pi if name == "P" else self.Qi)[~e]
            return x, y, 1
        X, Y, W, _ = self.xs[e]
        return X, Y, W

    def origin_event(self, h: int) -> tuple[str, int]:
        """(ring name, event) at which half-edge *h* starts."""
        name, k, fwd = self.piece(h)
        E = self.EP if name == "P" else self.EQ
        return name, (E[k] if fwd else E[(k + 1) % len(E)])

    def _outer_cycles(self) -> set:
        # Without crossings the two backward rings are the CW cycles.  With
        # crossings the edge graph is connected and the single CW cycle runs
        # through the lowest-leftmost vertex of either polygon, on the side
        # facing away from that vertex's polygon.
        if not self.xs:
            return {i for i, c in enumerate(self.cycles) if c[0] & 1}
        cands = [(v[1], v[0], "P", i) for i, v in enumerate(self.Pi)]
        cands += [(v[1], v[0], "Q", i) for i, v in enumerate(self.Qi)]
        _, _, name, i = min(cands)
        if name == "P":
            h = 2 * self.posP_vertex(i) + 1
        else:
            h = 2 * self.NP + 2 * self.posQ_vertex(i) + 1
        for ci, c in enumerate(self.cycles):
            if h in c:
                return {ci}
        raise EngineInvariantError("outer cycle not found")

    def posP_vertex(self, i: int) -> int:
        return self.EP.index(~i)

    def posQ_vertex(self, i: int) -> int:
        return self.EQ.index(~i)

    def _flags(self, cyc: list) -> tuple[bool, bool]:
        """(inside P, inside Q) of the face to the left of *cyc*, from a
        witness point: the midpoint of the cycle's first piece."""
        name, k, fwd = self.piece(cyc[0])
        E = self.EP if name == "P" else self.EQ
        x1, y1, w1 = self.event_point(name, E[k])
        x2, y2, w2 = self.event_point(name, E[(k + 1) % len(E)])
        X, Y, W = x1 * w2 + x2 * w1, y1 * w2 + y2 * w1, 2 * w1 * w2
        other = self.Qi if name == "P" else self.Pi
        inside_other = _strictly_inside_h(X, Y, W, other)
        return (fwd, inside_other) if name == "P" else (inside_other, fwd)

    def overlap_cycles(self) -> list[list[int]]:
        out = []
        for ci, cyc in enumerate(self.cycles):
            if ci in self.outer:
                continue
            ip, iq = self.flags[ci]
            if ip and iq:
                out.append(cyc)
        return out


def _strictly_inside_h(X: int, Y: int, W: int, ring) -> bool:
    """Winding test of the homogeneous point (X/W, Y/W), W > 0, against an
    integer ring; the point must not lie on the ring."""
    n = len(ring)
    winding = 0
    for i in range(n):
        ax, ay = ring[i]
        bx, by = ring[(i + 1) % n]
        ayw = ay * W
        byw = by * W
        if ayw <= Y:
            if byw > Y:
                o = (bx - ax) * (Y - ayw) - (by - ay) * (X - ax * W)
                if o > 0:
                    winding += 1
                elif o == 0:
                    raise EngineInvariantError("witness point on a boundary")
        elif byw <= Y:
            o = (bx - ax) * (Y - ayw) - (by - ay) * (X - ax * W)
            if o < 0:
                winding -= 1
            elif o == 0:
                raise EngineInvariantError("witness point on a boundary")
    return winding != 0


def _to_point(X: int, Y: int, W: int, scale: int) -> Point:
    den = W * scale
    x = Fraction(X, den)
    y = Fraction(Y, den)
    return Point(x.numerator if x.denominator == 1 else x, y.numerator if y.denominator == 1 else y)


# --- public operations ------------------------------------------------------------


def build_arrangement(s: Scene) -> Arrangement:
    """Planar subdivision of the two boundary rings with inside flags per face."""
    s.require_general_position()
    w = _Walk(s)
    scale = s._scale
    n, m = len(w.Pi), len(w.Qi)

    vertices = [_to_point(x, y, 1, scale) for x, y in w.Pi]
    vertices += [_to_point(x, y, 1, scale) for x, y in w.Qi]
    vertices += [_to_point(X, Y, W, scale) for X, Y, W, _ in w.xs]

    def vertex_id(name: str, e: int) -> int:
        if e < 0:
            return ~e if name == "P" else n + ~e
        return n + m + e

    face_of = [0] * len(w.nxt)
    faces = []
    # the unbounded face gathers every outer (clockwise) cycle
    outer = sorted(w.outer)
    bounded = [ci for ci in range(len(w.cycles)) if ci not in w.outer]

    holes: dict = {}
    if not w.xs:
        # at most one ring nests inside the other; its backward ring is a hole
        p_in_q = _strictly_inside_h(w.Pi[0][0], w.Pi[0][1], 1, w.Qi)
        q_in_p = _strictly_inside_h(w.Qi[0][0], w.Qi[0][1], 1, w.Pi)
        ring_cycle = {}
        for ci in range(len(w.cycles)):
            name, _, fwd = w.piece(w.cycles[ci][0])
            ring_cycle[(name, fwd)] = ci
        if p_in_q:
            holes[ring_cycle[("Q", True)]] = [ring_cycle[("P", False)]]
            outer = [ring_cycle[("Q", False)]]
        elif q_in_p:
            holes[ring_cycle[("P", True)]] = [ring_cycle[("Q", False)]]
            outer = [ring_cycle[("P", False)]]

    faces.append(Face(tuple(tuple(w.cycles[ci]) for ci in outer), False, False, True))
    for ci in outer:
        for h in w.cycles[ci]:
            face_of[h] = 0
    for ci in bounded:
        fi = len(faces)
        cycs = [ci] + holes.get(ci, [])
        ip, iq = w.flags[ci]
        faces.append(Face(tuple(tuple(w.cycles[c]) for c in cycs), ip, iq))
        for c in cycs:
            for h in w.cycles[c]:
                face_of[h] = fi

    half_edges = []
    for h in range(len(w.nxt)):
        name, k, fwd = w.piece(h)
        side = (w.sideP if name == "P" else w.sideQ)[k]
        oname, oe = w.origin_event(h)
        half_edges.append(
            HalfEdge(vertex_id(oname, oe), h ^ 1, w.nxt[h], face_of[h], EdgeProvenance(name, side), fwd)
        )
    return Arrangement(tuple(vertices), tuple(half_edges), tuple(faces), n, m)


def _lowest_leftmost(points) -> int:
    return min(range(len(points)), key=lambda i: (points[i].y, points[i].x))


def _overlap_from_cycle(w: _Walk, cyc: list, scale: int) -> Overlap:
    pts = []
    prov = []
    has_p = has_q = False
    for h in cyc:
        name, k, _ = w.piece(h)
        oname, oe = w.origin_event(h)
        if oe < 0:
            if oname == "P":
                has_p = True
            else:
                has_q = True
        X, Y, W = w.event_point(oname, oe)
        pts.append(_to_point(X, Y, W, scale))
        prov.append(EdgeProvenance(name, (w.sideP if name == "P" else w.sideQ)[k]))
    r = _lowest_leftmost(pts)
    pts = pts[r:] + pts[:r]
    prov = prov[r:] + prov[:r]
    return Overlap(Polygon(pts), tuple(prov), has_p, has_q)


def overlaps(s: Scene) -> list[Overlap]:
    """The overlaps of *s*, each with per-edge provenance, sorted by their
    lowest-leftmost vertex."""
    s.require_general_position()
    w = _Walk(s)
    out = [_overlap_from_cycle(w, c, s._scale) for c in w.overlap_cycles()]
    out.sort(key=lambda o: (o.boundary[0].y, o.boundary[0].x))
    return out


def count_components(s: Scene) -> int:
    s.require_general_position()
    return len(_Walk(s).overlap_cycles())


def vertex_free_parity_holds(o: Overlap) -> bool:
    """An overlap through no polygon vertex must have an even side count."""
    return (not o.vertex_free) or o.side_count % 2 == 0


def provenance_alternates(o: Overlap) -> bool:
    """Boundary edges of a vertex-free overlap alternate between P and Q."""
    if not o.vertex_free:
        raise InapplicableInputError("overlap passes through a polygon vertex")
    prov = o.provenance
    return all(prov[i].origin != prov[i - 1].origin for i in range(len(prov)))


def overlap_area(o: Overlap):
    return signed_area(o.boundary)


def overlaps_to_json(items: list[Overlap]) -> dict:
    return {"overlaps": [o.to_json() for o in items]}


def arrangement_summary(a: Arrangement) -> dict:
    both = sum(1 for f in a.faces if f.inside_p and f.inside_q)
    return {
        "vertices": len(a.vertices),
        "edges": len(a.half_edges) // 2,
        "faces": len(a.faces),
        "both_inside": both,
    }


def find_face(a: Arrangement, inside_p: bool, inside_q: bool) -> Optional[Face]:
    for f in a.faces:
        if f.inside_p == inside_p and f.inside_q == inside_q and not f.unbounded:
            return f
    return None
