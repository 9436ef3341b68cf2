"""Independent component count by triangulation and gluing.

Each polygon is triangulated by ear clipping; every triangle of ``P`` is
clipped against every triangle of ``Q``; two convex cells belong to the same
component when they share a boundary piece of positive length lying on an
inner diagonal (interior to both polygons).  The count of glued classes is
the number of overlaps.

This path shares no code with the arrangement engine beyond the exact
predicates, and it tolerates degenerate scenes: cells of zero area are
dropped and pieces lying on a polygon side are never glued, which is exactly
open-region semantics.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .geometry import Polygon, cross, is_simple
from .overlap import EngineInvariantError
from .scene import Scene


def _ears(ring: list, idx: list) -> list[int]:
    """Positions (into *idx*) of the ear tips of the sub-ring *idx*."""
    k = len(idx)
    ears = []
    for pos in range(k):
        a = ring[idx[pos - 1]]
        b = ring[idx[pos]]
        c = ring[idx[(pos + 1) % k]]
        if cross(a, b, c) <= 0:
            continue
        ok = True
        for other in idx:
            p = ring[other]
            if p == a or p == b or p == c:
                continue
            if cross(a, b, p) >= 0 and cross(b, c, p) >= 0 and cross(c, a, p) >= 0:
                ok = False
                break
        if ok:
            ears.append(pos)
    return ears


def triangulate(poly: Polygon, rng: Optional[random.Random] = None) -> list[tuple[int, int, int]]:
    """Ear-clipping triangulation of a simple CCW polygon, as vertex-index
    triples.

    Without *rng* the ear with the lowest-leftmost tip is cut first; with
    *rng* a uniformly random ear is cut, which yields a different (equally
    valid) triangulation for most polygons.
    """
    ring = list(poly.vertices)
    idx = list(range(len(ring)))
    tris = []
    while len(idx) > 3:
        ears = _ears(ring, idx)
        if not ears:
            straight = [
                pos for pos in range(len(idx))
                if cross(ring[idx[pos - 1]], ring[idx[pos]], ring[idx[(pos + 1) % len(idx)]]) == 0
            ]
            if not straight:
                raise EngineInvariantError("no ear found; polygon is not simple")
            del idx[straight[0]]
            continue
        if rng is None:
            pos = min(ears, key=lambda e: (ring[idx[e]].y, ring[idx[e]].x))
        else:
            pos = rng.choice(ears)
        k = len(idx)
        tris.append((idx[pos - 1], idx[pos], idx[(pos + 1) % k]))
        del idx[pos]
    if cross(ring[idx[0]], ring[idx[1]], ring[idx[2]]) > 0:
        tris.append(tuple(idx))
    return tris


def _clean(pts: list) -> list:
    out = []
    for p in pts:
        if not out or out[-1] != p:
            out.append(p)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    changed = True
    while changed and len(out) >= 3:
        changed = False
        for i in range(len(out)):
            if cross(out[i - 1], out[i], out[(i + 1) % len(out)]) == 0:
                del out[i]
                changed = True
                break
    return out if len(out) >= 3 else []


def clip_convex(subject: list, clip: list) -> list:
    """Sutherland-Hodgman: the convex polygon ``subject`` intersected with
    the closed convex CCW polygon ``clip``.  Empty or degenerate results come
    back as ``[]``."""
    out = list(subject)
    k = len(clip)
    for e in range(k):
        if len(out) < 3:
            return []
        a, b = clip[e], clip[(e + 1) % k]
        src = out
        out = []
        for i in range(len(src)):
            p, q = src[i], src[(i + 1) % len(src)]
            op = cross(a, b, p)
            oq = cross(a, b, q)
            if op >= 0:
                out.append(p)
            if (op > 0 and oq < 0) or (op < 0 and oq > 0):
                t = Fraction(op) / (op - oq)
                out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
        out = _clean(out)
    return out


def _line_key(u, v):
    a = Fraction(v[1] - u[1])
    b = Fraction(u[0] - v[0])
    c = -(a * u[0] + b * u[1])
    if a != 0:
        return (1, b / a, c / a)
    return (0, 1, c / b)


def _on_line(a, b, p) -> bool:
    return cross(a, b, p) == 0


def _bbox(pts):
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return min(xs), max(xs), min(ys), max(ys)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)


def components(P: Polygon, Q: Polygon, rng_p=None, rng_q=None) -> list[list[list]]:
    """Glued classes of convex cells; each class is a list of cells, each
    cell a CCW vertex list.  Works for any two simple CCW polygons."""
    if not (is_simple(P) and is_simple(Q)):
        raise EngineInvariantError("oracle needs simple polygons")
    tp = [[P[i] for i in t] for t in triangulate(P, rng_p)]
    tq = [[Q[i] for i in t] for t in triangulate(Q, rng_q)]
    return _components_from_triangles(P, Q, tp, tq)


def _components_from_triangles(P, Q, tp, tq) -> list[list[list]]:
    p_sides = _side_set(P)
    q_sides = _side_set(Q)
    bq = [_bbox(t) for t in tq]
    cells = []
    for t1 in tp:
        x0, x1, y0, y1 = _bbox(t1)
        for j, t2 in enumerate(tq):
            u0, u1, v0, v1 = bq[j]
            if u1 <= x0 or u0 >= x1 or v1 <= y0 or v0 >= y1:
                continue
            c = clip_convex(t1, t2)
            if c:
                cells.append((c, t1, t2))

    uf = _UnionFind(len(cells))
    groups: dict = {}
    for ci, (cell, t1, t2) in enumerate(cells):
        k = len(cell)
        for e in range(k):
            u, v = cell[e], cell[(e + 1) % k]
            on_side = False
            on_diag = False
            for tri, sides in ((t1, p_sides), (t2, q_sides)):
                for s in range(3):
                    a, b = tri[s], tri[(s + 1) % 3]
                    if _on_line(a, b, u) and _on_line(a, b, v):
                        if (a, b) in sides:
                            on_side = True
                        else:
                            on_diag = True
            if on_side or not on_diag:
                continue
            key = _line_key(u, v)
            # parametrise by x unless the line is vertical
            axis = 1 if u[0] == v[0] else 0
            lo, hi = (u[axis], v[axis]) if u[axis] < v[axis] else (v[axis], u[axis])
            groups.setdefault(key, []).append((ci, lo, hi))

    for key, items in groups.items():
        matched = [False] * len(items)
        for i in range(len(items)):
            ci, lo1, hi1 = items[i]
            for j in range(i + 1, len(items)):
                cj, lo2, hi2 = items[j]
                if ci == cj:
                    continue
                if max(lo1, lo2) < min(hi1, hi2):
                    uf.union(ci, cj)
                    matched[i] = matched[j] = True
        if not all(matched):
            # a cell edge on an inner diagonal with nothing across it would
            # make a diagonal part of an overlap boundary
            raise EngineInvariantError("unmatched cell edge on an inner diagonal")

    classes: dict = {}
    for ci in range(len(cells)):
        classes.setdefault(uf.find(ci), []).append(cells[ci][0])
    return [classes[r] for r in sorted(classes)]


def _side_set(poly: Polygon) -> set:
    vs = poly.vertices
    n = len(vs)
    out = set()
    for i in range(n):
        out.add((vs[i], vs[(i + 1) % n]))
        out.add((vs[(i + 1) % n], vs[i]))
    return out


def open_component_count(P: Polygon, Q: Polygon, rng_p=None, rng_q=None) -> int:
    """Components of int(P) & int(Q) for any simple CCW pair, degenerate or not."""
    return len(components(P, Q, rng_p, rng_q))


def oracle_count(s: Scene, seed: Optional[int] = None) -> int:
    """Overlap count of a general-position scene by triangulation gluing.

    ``seed=None`` uses the deterministic lowest-leftmost-ear triangulations;
    an integer seed picks random ears instead, giving a second, independent
    pair of triangulations.
    """
    s.require_general_position()
    if seed is None:
        return open_component_count(s.P, s.Q)
    return open_component_count(s.P, s.Q, random.Random(seed), random.Random(seed + 1))
