"""Count the overlaps of two hand-drawn polygons, exactly.

A six-pointed star made of two triangles has six small overlap triangles
at its points and one hexagon in the middle, but those all touch, so the
intersection is one connected piece.  A crossing pair of thin bars does
better: the intersection falls apart into separate pieces.
"""
from fractions import Fraction

from polyoverlap import Scene, bounds, overlaps, provenance_alternates

star = Scene.from_points([(0, 0), (6, 0), (3, 5)], [(0, 3), (3, -2), (6, 3)])
print("two triangles:", len(overlaps(star)), "overlap(s)")

# A comb with four slanted teeth against a bar lying across them.  Teeth
# lean differently so that no three side lines meet in one point.
comb = [(0, 0), (9, -1), (8, 5), (7, 1), (6, 6), (4, 1), (3, 5), (2, 1), (1, 6)]
bar = [(-1, 2), (10, Fraction(21, 10)), (10, Fraction(7, 2)), (-1, 3)]
scene = Scene.from_points(comb, bar)
pieces = overlaps(scene)
print("comb and bar:", len(pieces), "overlap(s)")
for i, o in enumerate(pieces):
    alt = provenance_alternates(o) if o.vertex_free else None
    print(f"  piece {i}: {o.side_count} sides, vertex-free={o.vertex_free}, alternating={alt}")

b = bounds(scene.n, scene.m)
print(f"for n={b.n}, m={b.m}: at least {b.lower} achievable, at most {b.upper} possible")
