"""Closed-form overlap bounds and a per-scene checker against them."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .geometry import is_convex
from .overlap import overlaps, provenance_alternates, vertex_free_parity_holds
from .scene import Scene


def convex_value(n: int, m: int) -> int:
    """Largest overlap count between an n-gon and a *convex* m-gon."""
    if n < 3 or m < 3:
        raise ValueError("polygons need at least 3 sides")
    return (m + n - 2) // 2 if n >= m + 2 else n - 2


def upper_general(n: int, m: int) -> Fraction:
    """``floor(m/2) * n/2 + m/2`` with ``m <= n``, as an exact rational."""
    n, m = max(n, m), min(n, m)
    return Fraction(m // 2 * n, 2) + Fraction(m, 2)


@dataclass(frozen=True)
class BoundRecord:
    n: int
    m: int
    lower: int
    upper_general: Fraction
    upper_trivial: int
    convex_value: int
    conjecture: int

    @property
    def upper(self) -> int:
        """The tighter of the two general upper bounds, as an integer."""
        return min(math.floor(self.upper_general), self.upper_trivial)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "lower": self.lower,
            "upper_general": str(self.upper_general),
            "upper_trivial": self.upper_trivial,
            "convex_value": self.convex_value,
            "conjecture": self.conjecture,
        }


def bounds(n: int, m: int) -> BoundRecord:
    """Bounds for an n-gon against an m-gon; the pair is sorted so m <= n.

    ``convex_value`` assumes the smaller polygon is the convex one.
    """
    if m > n:
        n, m = m, n
    if m < 3:
        raise ValueError("polygons need at least 3 sides")
    eps = 1 if n % 2 and m % 2 else 0
    return BoundRecord(
        n=n,
        m=m,
        lower=(n // 2) * (m // 2),
        upper_general=upper_general(n, m),
        upper_trivial=(n - 2) * (m - 2),
        convex_value=convex_value(n, m),
        conjecture=(n // 2) * (m // 2) + eps,
    )


@dataclass(frozen=True)
class SceneReport:
    n: int
    m: int
    count: int
    upper_general: int
    upper_trivial: int
    convex_limit: Optional[int]
    parity_ok: bool
    alternation_ok: bool
    vertex_free: int
    side_counts: tuple[int, ...]

    @property
    def bounds_ok(self) -> bool:
        if self.count > self.upper_general or self.count > self.upper_trivial:
            return False
        return self.convex_limit is None or self.count <= self.convex_limit

    @property
    def ok(self) -> bool:
        return self.bounds_ok and self.parity_ok and self.alternation_ok

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "count": self.count,
            "upper_general": self.upper_general,
            "upper_trivial": self.upper_trivial,
            "convex_limit": self.convex_limit,
            "parity_ok": self.parity_ok,
            "alternation_ok": self.alternation_ok,
            "vertex_free": self.vertex_free,
            "side_counts": list(self.side_counts),
        }


def verify_scene(s: Scene, convex_q: bool = False) -> SceneReport:
    """Count the overlaps of a general-position scene and check them against
    the upper bounds and the even-sides rule for vertex-free overlaps.

    With *convex_q* the convex bound for (``s.n``, ``s.m``) applies too, and
    ``Q`` must really be convex.
    """
    items = overlaps(s)
    rec = bounds(s.n, s.m)
    limit = None
    if convex_q:
        if not is_convex(s.Q):
            raise ValueError("convex_q requested but Q is not convex")
        limit = convex_value(s.n, s.m)
    free = [o for o in items if o.vertex_free]
    return SceneReport(
        n=s.n,
        m=s.m,
        count=len(items),
        upper_general=math.floor(rec.upper_general),
        upper_trivial=rec.upper_trivial,
        convex_limit=limit,
        parity_ok=all(vertex_free_parity_holds(o) for o in items),
        alternation_ok=all(provenance_alternates(o) for o in free),
        vertex_free=len(free),
        side_counts=tuple(o.side_count for o in items),
    )
