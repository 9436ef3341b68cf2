"""Exact scenes with many overlaps, parameterised by side counts.

* ``saw_pair``: two interleaved combs ("crowns"), one vertical and one
  horizontal, crossing in floor(n/2) * floor(m/2) small quadrilaterals.
* ``convex_pair``: a concave parabolic arc over a V against a convex polygon
  poking through every arc side, with extra teeth when n is large.
* ``special_pair``: three small fixed scenes with 3, 4 and 5 overlaps.

Generators return general-position scenes.  Integer layouts have many
symmetric concurrences, so they get a tiny deterministic dyadic jitter.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction

from .bounds import convex_value
from .geometry import GeometryError, Polygon, ccw, is_convex
from .scene import Scene

JITTER_BITS = 24
JITTER_SPREAD = 1 << 12


class UnsupportedParameterError(ValueError):
    pass


class Kind(str, enum.Enum):
    SAW = "saw"
    CONVEX = "convex"
    SPECIAL53 = "special53"
    SPECIAL44 = "special44"
    SPECIAL55 = "special55"


@dataclass(frozen=True)
class ConstructionSpec:
    kind: Kind
    n: int
    m: int
    expected_count: int


def _jitter(points, rng: random.Random) -> list:
    den = 1 << JITTER_BITS
    return [
        (
            x + Fraction(rng.randint(-JITTER_SPREAD, JITTER_SPREAD), den),
            y + Fraction(rng.randint(-JITTER_SPREAD, JITTER_SPREAD), den),
        )
        for x, y in points
    ]


def _settle(P: list, Q: list, salt: int, convex_q: bool = False) -> Scene:
    """Jitter both rings until the scene is in general position."""
    for attempt in range(64):
        rng = random.Random(salt * 1000 + attempt)
        try:
            s = Scene(ccw(Polygon(_jitter(P, rng))), ccw(Polygon(_jitter(Q, rng))))
        except GeometryError:
            continue
        if s.general_position and (not convex_q or is_convex(s.Q)):
            return s
    raise GeometryError("could not reach general position")  # pragma: no cover


def _crown(count: int, top: int, bottom: int, odd: bool) -> list:
    """Comb with ``count`` upward spikes over a deep V-shaped base.

    Spike tips sit at (2k, top) and notches at (2k+1, bottom).  The base
    apex lies far enough below that its two long sides stay clear of the
    spikes.  ``odd`` bends the right long side to spend one extra vertex.
    """
    depth = (count - 1) * (top - bottom) + 1
    base = (count - 1, bottom - depth)
    ring = [base]
    for k in range(count):
        ring.append((2 * k, top))
        if k < count - 1:
            ring.append((2 * k + 1, bottom))
    if odd:
        # midpoint of the last tip -> base side, pushed outward
        tip = ring[-1]
        ring.append((Fraction(tip[0] + base[0], 2) + Fraction(1, 2), Fraction(tip[1] + base[1], 2)))
    return ring


def saw_pair(n: int, m: int) -> Scene:
    """P has floor(n/2) vertical teeth, Q has floor(m/2) horizontal ones."""
    if n < 4 or m < 4:
        raise UnsupportedParameterError("saw_pair needs n >= 4 and m >= 4")
    a, b = n // 2, m // 2
    P = _crown(a, 2 * b - 1, -1, n % 2 == 1)
    Q = [(-v, u) for u, v in _crown(b, 1, 1 - 2 * a, m % 2 == 1)]
    return _settle(P, Q, salt=n * 100 + m)


def _lower_edge(xi, x):
    """Height at *x* of the convex polygon's edge passing above arc vertex ``xi``."""
    return xi * xi + Fraction(3, 2) + 2 * xi * (x - xi)


def convex_pair(n: int, m: int) -> Scene:
    """P has a concave arc over a V; Q is a convex m-gon; the count equals
    the convex optimum for (n, m)."""
    if n < 3 or m < 3:
        raise UnsupportedParameterError("convex_pair needs n >= 3 and m >= 3")
    if n >= m + 2:
        k = m
    else:
        k = n - 2
    K = k * k + k
    arc = [(2 * i - k, (2 * i - k) ** 2) for i in range(k + 1)]
    apex = (0, -K)

    teeth = (n - m - 2) // 2 if n >= m + 2 else 0
    sites = list(range(1, k))
    per_site = {i: 0 for i in sites}
    for t in range(teeth):
        per_site[sites[t % len(sites)]] += 1

    ring = []
    for i, (xi, yi) in enumerate(arc):
        ring.append((xi, yi))
        c = per_site.get(i, 0)
        if c and i < k:
            w = Fraction(1, 2 * c)
            slope = Fraction(arc[i + 1][1] - yi, 2)
            for q in range(c):
                xa = xi + (q + Fraction(1, 2)) * w
                ring.append((xa, _lower_edge(xi, xa) + Fraction(1, 2)))
                xv = xi + (q + 1) * w
                ring.append((xv, yi + slope * (xv - xi)))
    ring.append(apex)
    if n >= m + 2 and (n - m - 2) % 2 == 1:
        left = arc[0]
        ring.append((Fraction(left[0] + apex[0], 2) - 1, Fraction(left[1] + apex[1], 2)))

    Q = [(u, u * u + Fraction(1, 2)) for u in range(-(k - 1), k, 2)]
    extra = m - k
    if extra:
        X = Fraction(1, 2) if k == 1 else Fraction(k - 1)
        top = k * k + 2
        if extra == 1:
            Q.append((0, top))
        else:
            cap = Fraction(1, 4)
            for j in range(extra):
                x = X - 2 * X * j / (extra - 1)
                Q.append((x, top + cap * (X * X - x * x)))
    return _settle(ring, Q, salt=10_000 + n * 100 + m, convex_q=True)


_SPECIALS = {
    Kind.SPECIAL53: (
        [(0, 0), (-4, 2), (-1, 1), (1, 1), (4, 2)],
        [("-14/5", "3/2"), (0, "9/10"), ("14/5", "3/2")],
        3,
    ),
    Kind.SPECIAL44: (
        [(0, 0), (-2, 4), (0, 1), (2, 4)],
        [(3, 2), (-2, 1), ("3/2", 2), (-2, 3)],
        4,
    ),
    Kind.SPECIAL55: (
        [(0, 0), (-5, 4), (-1, 1), (1, 1), (5, 4)],
        [("-7/2", "17/10"), (0, "17/20"), ("37/10", "171/100"), (-5, 3), ("31/10", "17/10")],
        5,
    ),
}


def _rational(v):
    return Fraction(v) if isinstance(v, str) else v


def special_pair(kind) -> Scene:
    """The fixed small scenes: (5,3) with 3 overlaps, (4,4) with 4, (5,5) with 5."""
    kind = Kind(kind)
    if kind not in _SPECIALS:
        raise UnsupportedParameterError(f"{kind.value} is not a fixed scene")
    P, Q, _ = _SPECIALS[kind]
    P = [(_rational(x), _rational(y)) for x, y in P]
    Q = [(_rational(x), _rational(y)) for x, y in Q]
    s = Scene.from_points(P, Q)
    s.require_general_position()
    return s


def expected_count(kind, n: int = 0, m: int = 0) -> int:
    kind = Kind(kind)
    if kind is Kind.SAW:
        return (n // 2) * (m // 2)
    if kind is Kind.CONVEX:
        return convex_value(n, m)
    return _SPECIALS[kind][2]


def construct(kind, n: int = 0, m: int = 0) -> tuple[Scene, ConstructionSpec]:
    """Build a scene of the given kind and say how many overlaps it has."""
    kind = Kind(kind)
    if kind is Kind.SAW:
        s = saw_pair(n, m)
    elif kind is Kind.CONVEX:
        s = convex_pair(n, m)
    else:
        s = special_pair(kind)
    return s, ConstructionSpec(kind, s.n, s.m, expected_count(kind, s.n, s.m))
