"""Random and local search for scenes with many overlaps.

Per-trial randomness comes from ``numpy.random.SeedSequence([seed, trial])``
so each trial's outcome depends only on the master seed and its index.
"""
from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .bounds import BoundRecord, SceneReport, bounds, verify_scene
from .formats import dumps_scene
from .geometry import GeometryError, Polygon, ccw, check_polygon, is_convex
from .perturbation import PerturbationError, resolve_degeneracies
from .scene import Scene

GRID = 1 << 16


class BoundViolationError(RuntimeError):
    """A scene beat a proven upper bound."""

    def __init__(self, report: SceneReport, path: Optional[str] = None):
        self.report = report
        self.path = path
        where = f"; scene written to {path}" if path else ""
        super().__init__(f"bound violated with {report.count} overlaps{where}")


def _valid(points, convex: bool = False) -> Optional[Polygon]:
    try:
        poly = Polygon(points)
        check_polygon(poly)
    except GeometryError:
        return None
    if convex and not is_convex(poly):
        return None
    return poly


def random_star_polygon(n: int, rng: np.random.Generator, grid: int = GRID) -> Polygon:
    """Simple n-gon from random grid points sorted by angle around their
    centroid; rejected samples (angle ties, straight corners) are redrawn."""
    while True:
        xy = rng.integers(0, grid + 1, size=(n, 2))
        c = xy.mean(axis=0)
        order = np.argsort(np.arctan2(xy[:, 1] - c[1], xy[:, 0] - c[0]), kind="stable")
        pts = [(int(xy[i, 0]), int(xy[i, 1])) for i in order]
        poly = _valid(pts)
        if poly is not None:
            return poly


def random_convex_polygon(m: int, rng: np.random.Generator, grid: int = GRID) -> Polygon:
    """Convex m-gon by Valtr's method on integer coordinates, shifted into
    the grid."""
    while True:
        xs = np.sort(rng.integers(0, grid + 1, size=m))
        ys = np.sort(rng.integers(0, grid + 1, size=m))
        vx = _chain_vectors(xs, rng)
        vy = _chain_vectors(ys, rng)
        rng.shuffle(vy)
        vec = sorted(zip(vx, vy), key=lambda v: math.atan2(v[1], v[0]))
        pts = []
        x = y = 0
        for dx, dy in vec:
            pts.append((x, y))
            x += dx
            y += dy
        mx = min(p[0] for p in pts)
        my = min(p[1] for p in pts)
        pts = [(p[0] - mx, p[1] - my) for p in pts]
        poly = _valid(pts, convex=True)
        if poly is not None:
            return poly


def _chain_vectors(sorted_vals: np.ndarray, rng: np.random.Generator) -> list[int]:
    lo, hi = int(sorted_vals[0]), int(sorted_vals[-1])
    a, b = lo, lo
    out = []
    for v in sorted_vals[1:-1]:
        v = int(v)
        if rng.random() < 0.5:
            out.append(v - a)
            a = v
        else:
            out.append(b - v)
            b = v
    out.append(hi - a)
    out.append(b - hi)
    return out


def random_scene(n: int, m: int, rng: np.random.Generator, convex_q: bool = False) -> Scene:
    """Random P (star-shaped by construction) and Q, both CCW.  The scene may
    be degenerate; the caller decides what to do about that."""
    P = random_star_polygon(n, rng)
    Q = random_convex_polygon(m, rng) if convex_q else random_star_polygon(m, rng)
    return Scene(P, Q)


def random_spiky_polygon(n: int, rng: np.random.Generator, center=(0, 0), radius: int = 1 << 14) -> Polygon:
    """Star-shaped n-gon around *center* with radii drawn from
    [radius/10, radius], which gives deep notches."""
    while True:
        ang = np.sort(rng.uniform(0, 2 * math.pi, n))
        r = rng.uniform(0.1, 1.0, n) * radius
        pts = [
            (int(center[0] + round(r[i] * math.cos(ang[i]))), int(center[1] + round(r[i] * math.sin(ang[i]))))
            for i in range(n)
        ]
        poly = _valid(pts)
        if poly is not None:
            return poly


def shaken(s: Scene, rng: np.random.Generator, amount: Fraction, attempts: int = 50) -> Optional[Scene]:
    """Move every vertex by a random dyadic vector of size at most *amount*;
    ``None`` if no attempt gives a valid general-position scene."""
    grain = 1 << 8
    for _ in range(attempts):
        rings = []
        for poly in (s.P, s.Q):
            steps = rng.integers(-grain, grain + 1, size=(len(poly), 2))
            rings.append(
                [(v.x + amount * int(dx) / grain, v.y + amount * int(dy) / grain) for v, (dx, dy) in zip(poly, steps)]
            )
        P, Q = _valid(rings[0]), _valid(rings[1])
        if P is None or Q is None:
            continue
        out = Scene(P, Q)
        if out.general_position:
            return out
    return None


def _reflect(poly: Polygon, i: int) -> list:
    a, b = poly[i], poly[(i + 1) % len(poly)]
    dx, dy = b.x - a.x, b.y - a.y
    den = Fraction(dx * dx + dy * dy)
    out = []
    for v in poly:
        t = ((v.x - a.x) * dx + (v.y - a.y) * dy) / den
        fx, fy = a.x + t * dx, a.y + t * dy
        out.append((2 * fx - v.x, 2 * fy - v.y))
    return out


def degenerate_scene(rng: np.random.Generator, grid: int = 8) -> Scene:
    """A scene with at least one degeneracy: shared side lines, a vertex on
    a foreign side or vertex, or simply a coarse grid.  Cycles through these
    families at random."""
    while True:
        n, m = (int(v) for v in rng.integers(3, 8, size=2))
        P = random_star_polygon(n, rng, grid)
        family = int(rng.integers(4))
        if family == 0:
            Q = random_star_polygon(m, rng, grid)
        elif family == 1:
            # mirror image across one side, slid along that side
            i = int(rng.integers(n))
            a, b = P[i], P[(i + 1) % n]
            t = Fraction(int(rng.integers(-2, 3)), 2)
            Q = Polygon(_reflect(P, i)).translated(t * (b.x - a.x), t * (b.y - a.y))
        elif family == 2:
            # copy slid along one of its own sides: that side line is shared
            i = int(rng.integers(n))
            a, b = P[i], P[(i + 1) % n]
            t = Fraction(int(rng.integers(1, 4)), 4)
            Q = P.translated(t * (b.x - a.x), t * (b.y - a.y))
        else:
            # a vertex of Q placed on a vertex or side point of P
            Q = random_star_polygon(m, rng, grid)
            i = int(rng.integers(n))
            a, b = P[i], P[(i + 1) % n]
            t = Fraction(int(rng.integers(0, 3)), 2)
            target = (a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
            j = int(rng.integers(m))
            Q = Q.translated(target[0] - Q[j].x, target[1] - Q[j].y)
        P2 = _valid(P.vertices)
        Q2 = _valid(ccw(Q).vertices) if isinstance(Q, Polygon) else None
        if P2 is None or Q2 is None:
            continue
        s = Scene(P2, Q2)
        if not s.general_position:
            return s


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, trial]))


@dataclass
class SearchResult:
    best_scene: Optional[Scene]
    best_count: int
    trials: int
    seed: int
    violations: list[SceneReport] = field(default_factory=list)
    perturbed: int = 0
    bounds: Optional[BoundRecord] = None

    def to_json(self) -> dict:
        return {
            "best_count": self.best_count,
            "trials": self.trials,
            "seed": self.seed,
            "perturbed": self.perturbed,
            "violations": [r.to_json() for r in self.violations],
            "bounds": self.bounds.to_json() if self.bounds else None,
        }


def _general(s: Scene) -> tuple[Scene, bool]:
    if s.general_position:
        return s, False
    cert = resolve_degeneracies(s.P, s.Q)
    return cert.after, True


def _dump(s: Scene, dump_dir: Optional[str], tag: str) -> Optional[str]:
    if dump_dir is None:
        return None
    os.makedirs(dump_dir, exist_ok=True)
    path = os.path.join(dump_dir, f"violation-{tag}.json")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_scene(s))
    return path


def _check(report: SceneReport, s: Scene, dump_dir, tag) -> None:
    if not report.ok:
        raise BoundViolationError(report, _dump(s, dump_dir, tag))


def random_search(
    n: int,
    m: int,
    trials: int,
    seed: int,
    convex_q: bool = False,
    dump_dir: Optional[str] = None,
    on_scene=None,
) -> SearchResult:
    """Sample ``trials`` random scenes and keep the one with most overlaps.

    Degenerate samples are perturbed into general position first.  A scene
    beating a proven bound raises :class:`BoundViolationError` (after writing
    it to *dump_dir* if given).  *on_scene*, if set, is called with every
    evaluated scene and its report.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    result = SearchResult(None, -1, trials, seed, bounds=bounds(n, m))
    for t in range(trials):
        s = random_scene(n, m, trial_rng(seed, t), convex_q)
        try:
            s, moved = _general(s)
        except PerturbationError:
            continue
        result.perturbed += moved
        report = verify_scene(s, convex_q)
        if on_scene is not None:
            on_scene(s, report)
        _check(report, s, dump_dir, f"{n}-{m}-{seed}-{t}")
        if report.count > result.best_count:
            result.best_count = report.count
            result.best_scene = s
    return result


def _nudged(s: Scene, rng: np.random.Generator, step: int, shift: int):
    which = int(rng.integers(2))
    poly = s.P if which == 0 else s.Q
    i = int(rng.integers(len(poly)))
    dx, dy = (int(v) for v in rng.integers(-step, step + 1, size=2))
    if dx == 0 and dy == 0:
        return None
    v = poly[i]
    unit = Fraction(2) ** shift
    moved = list(poly.vertices)
    moved[i] = (v.x + dx * unit, v.y + dy * unit)
    new = _valid(moved)
    if new is None:
        return None
    return (new, s.Q) if which == 0 else (s.P, new)


def hill_climb(start: Scene, budget: int, seed: int, convex_q: bool = False) -> SearchResult:
    """Single-vertex nudges accepted when the count does not drop.

    Step sizes are multiples of ``2**(e - 10)`` where ``2**e`` is about the
    width of the scene, so moves stay on a dyadic lattice.
    """
    start.require_general_position()
    rng = np.random.default_rng(np.random.SeedSequence([seed, 0]))
    current = start
    report = verify_scene(current, convex_q)
    _check(report, current, None, "")
    result = SearchResult(current, report.count, budget, seed, bounds=bounds(current.n, current.m))
    pts = list(start.P) + list(start.Q)
    span = max(max(p.x for p in pts) - min(p.x for p in pts), max(p.y for p in pts) - min(p.y for p in pts))
    shift = max(int(math.floor(math.log2(span))), -30) - 10 if span > 0 else -10
    for _ in range(budget):
        cand = _nudged(current, rng, 8, shift)
        if cand is None:
            continue
        P, Q = cand
        if convex_q and not is_convex(Q):
            continue
        try:
            s = Scene(P, Q)
        except GeometryError:
            continue
        if not s.general_position:
            continue
        r = verify_scene(s, convex_q)
        _check(r, s, None, "")
        if r.count >= result.best_count:
            current = s
            result.best_count = r.count
            result.best_scene = s
    return result


def result_json(result: SearchResult) -> str:
    return json.dumps(result.to_json(), indent=1, sort_keys=True) + "\n"
