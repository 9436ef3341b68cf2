from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyoverlap import Scene
from polyoverlap.bounds import bounds
from polyoverlap.constructions import saw_pair, special_pair
from polyoverlap.geometry import Polygon, signed_area
from polyoverlap.oracle import oracle_count, triangulate
from polyoverlap.overlap import (
    InapplicableInputError,
    build_arrangement,
    count_components,
    overlap_area,
    overlaps,
    overlaps_to_json,
    provenance_alternates,
    vertex_free_parity_holds,
)
from polyoverlap.scene import DegenerateSceneError
from polyoverlap.search import random_spiky_polygon, random_star_polygon, trial_rng

from conftest import UNIT_SQUARE


def test_disjoint_triangles(disjoint_triangles):
    arr = build_arrangement(disjoint_triangles)
    flags = sorted((f.inside_p, f.inside_q) for f in arr.faces)
    # outer face, inside P only, inside Q only
    assert len(arr.faces) == 3
    assert (True, True) not in flags
    assert sum(f.unbounded for f in arr.faces) == 1
    assert count_components(disjoint_triangles) == 0


def test_figure_44_arrangement():
    s = special_pair("special44")
    arr = build_arrangement(s)
    assert sum(f.inside_p and f.inside_q for f in arr.faces) == 4
    assert arr.euler_characteristic() == 1 + arr.component_count()
    outer = [f for f in arr.faces if f.unbounded]
    assert len(outer) == 1 and not outer[0].inside_p and not outer[0].inside_q


def test_star_of_david(star_of_david):
    items = overlaps(star_of_david)
    assert len(items) == 1 == oracle_count(star_of_david)
    hexagon = items[0]
    assert hexagon.side_count == 6 and hexagon.vertex_free
    assert vertex_free_parity_holds(hexagon)
    assert provenance_alternates(hexagon)


def test_nested_squares(nested_squares):
    assert count_components(nested_squares) == 1


@pytest.mark.parametrize("kind, want", [("special53", 3), ("special44", 4), ("special55", 5)])
def test_figure_scenes(kind, want):
    s = special_pair(kind)
    assert count_components(s) == want
    assert oracle_count(s) == want


def test_counts_of_constructions():
    assert count_components(saw_pair(6, 6)) == 9


def test_inside_ear_triangle_gives_one():
    P = Polygon([(0, 0), (8, 0), (8, 8), (4, 2), (0, 8)])
    ear = [P[i] for i in triangulate(P)[0]]
    cx = Fraction(sum(v.x for v in ear), 3)
    cy = Fraction(sum(v.y for v in ear), 3)
    d = Fraction(1, 50)
    Q = [(cx - d, cy - d), (cx + d, cy - d), (cx, cy + d)]
    s = Scene.from_points(P, Q)
    assert oracle_count(s) == 1 == count_components(s)


def test_overlap_invariants_on_saw():
    s = saw_pair(6, 6)
    items = overlaps(s)
    for o in items:
        assert signed_area(o.boundary) > 0
        assert vertex_free_parity_holds(o)
        for k, prov in enumerate(o.provenance):
            a, b = o.boundary[k], o.boundary[(k + 1) % o.side_count]
            src = s.P if prov.origin == "P" else s.Q
            c, d = src[prov.side], src[(prov.side + 1) % len(src)]
            # the edge lies on its source side's carrier line
            for p in (a, b):
                assert (d.x - c.x) * (p.y - c.y) - (d.y - c.y) * (p.x - c.x) == 0
    free = [o for o in items if o.vertex_free]
    assert free and all(o.side_count == 4 and provenance_alternates(o) for o in free)


def test_vertex_free_alternation_on_saw_8_8():
    free = [o for o in overlaps(saw_pair(8, 8)) if o.vertex_free]
    assert len(free) == 16
    assert all(provenance_alternates(o) for o in free)


def test_alternation_needs_vertex_free_overlap():
    items = overlaps(special_pair("special53"))
    with pytest.raises(InapplicableInputError):
        provenance_alternates(items[0])


def test_triangle_overlaps_contain_a_vertex():
    for kind in ("special53", "special55"):
        for o in overlaps(special_pair(kind)):
            if o.side_count == 3:
                assert not o.vertex_free


def test_degenerate_scene_is_rejected():
    s = Scene.from_points(UNIT_SQUARE, [(x + 1, y) for x, y in UNIT_SQUARE])
    with pytest.raises(DegenerateSceneError, match="perturbation"):
        count_components(s)
    with pytest.raises(DegenerateSceneError):
        oracle_count(s)


def test_overlap_order_and_json_are_stable():
    s = saw_pair(5, 5)
    items = overlaps(s)
    keys = [(o.boundary[0].y, o.boundary[0].x) for o in items]
    assert keys == sorted(keys)
    doc = overlaps_to_json(items)
    assert doc == overlaps_to_json(overlaps(s))
    assert set(doc["overlaps"][0]) == {"boundary", "provenance"}


def _scene(seed: int) -> Scene:
    rng = trial_rng(seed, 0)
    n, m = (int(v) for v in rng.integers(3, 9, size=2))
    if seed % 2:
        P = random_spiky_polygon(n, rng)
        Q = random_spiky_polygon(m, rng, center=(int(rng.integers(-8000, 8000)), int(rng.integers(-8000, 8000))))
    else:
        P, Q = random_star_polygon(n, rng), random_star_polygon(m, rng)
    return Scene(P, Q)


# a rotation with rational entries (3-4-5 triangle)
ROT = (Fraction(3, 5), Fraction(-4, 5), Fraction(4, 5), Fraction(3, 5))


def _moved(poly, shift):
    a, b, c, d = ROT
    return Polygon([(a * v.x + b * v.y + shift, c * v.x + d * v.y - shift) for v in poly])


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6))
def test_engine_properties_on_random_scenes(seed):
    s = _scene(seed)
    if not s.general_position:
        return
    items = overlaps(s)
    count = len(items)
    assert count == oracle_count(s)
    rec = bounds(s.n, s.m)
    assert count <= rec.upper_trivial and count <= rec.upper_general
    assert all(vertex_free_parity_holds(o) for o in items)
    assert sum(overlap_area(o) for o in items) <= min(signed_area(s.P), signed_area(s.Q))
    assert count_components(s.swapped()) == count
    assert count_components(Scene(_moved(s.P, 7), _moved(s.Q, 7))) == count
