from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyoverlap.geometry import (
    Location,
    MalformedInputError,
    Orientation,
    Point,
    Polygon,
    Segment,
    general_position,
    is_simple,
    orient,
    point_in_polygon,
    pt,
    scalar,
    segment_intersection,
    signed_area,
    simplicity_witness,
)
from polyoverlap.constructions import saw_pair

from conftest import DISJOINT_A, DISJOINT_B, UNIT_SQUARE


def test_scalars_are_exact_and_reject_floats():
    assert scalar(Fraction(4, 2)) == 2 and type(scalar(Fraction(4, 2))) is int
    assert scalar(Fraction(2, 4)) == Fraction(1, 2)
    with pytest.raises(TypeError):
        scalar(0.5)


@pytest.mark.parametrize(
    "a, b, c, want",
    [
        ((0, 0), (1, 0), (0, 1), Orientation.COUNTERCLOCKWISE),
        ((0, 0), (1, 1), (2, 2), Orientation.COLLINEAR),
        ((0, 0), (0, 1), (1, 0), Orientation.CLOCKWISE),
    ],
)
def test_orient(a, b, c, want):
    assert orient(pt(*a), pt(*b), pt(*c)) == want


def seg(a, b):
    return Segment(pt(*a), pt(*b))


def test_segment_intersection_cases():
    assert segment_intersection(seg((0, 0), (2, 2)), seg((0, 2), (2, 0))) == Point(1, 1)
    assert segment_intersection(seg((0, 0), (1, 0)), seg((0, 1), (1, 1))) is None
    assert segment_intersection(seg((0, 0), (2, 0)), seg((1, 0), (3, 0))) == seg((1, 0), (2, 0))


def test_signed_area():
    assert signed_area(Polygon(UNIT_SQUARE)) == 1
    assert signed_area(Polygon(UNIT_SQUARE[::-1])) == -1
    assert signed_area(Polygon([(0, 0), (4, 0), (0, 4)])) == 8


def test_is_simple():
    assert is_simple(Polygon(UNIT_SQUARE))
    bowtie = Polygon([(0, 0), (1, 1), (1, 0), (0, 1)])
    assert not is_simple(bowtie)
    assert simplicity_witness(bowtie) == (0, 2)
    assert is_simple(Polygon([(0, 0), (4, 2), (1, 1), (-1, 1), (-4, 2)]))
    with pytest.raises(MalformedInputError):
        is_simple(Polygon([(0, 0), (1, 0)]))


def test_point_in_polygon():
    sq = Polygon(UNIT_SQUARE)
    half = Fraction(1, 2)
    assert point_in_polygon(pt(half, half), sq) is Location.INSIDE
    assert point_in_polygon(pt(2, 2), sq) is Location.OUTSIDE
    assert point_in_polygon(pt(half, 0), sq) is Location.ON_BOUNDARY


def _brute_concurrences(P, Q):
    """Every triple of side lines with a common point, by direct solving."""
    lines = []
    for poly in (P, Q):
        for e in poly.edges():
            a, b = e
            A, B = b.y - a.y, a.x - b.x
            lines.append((A, B, -(A * a.x + B * a.y)))
    hits = 0
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            for k in range(j + 1, len(lines)):
                M = [lines[i], lines[j], lines[k]]
                det = (
                    M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
                    - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
                    + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])
                )
                parallel = all(
                    M[p][0] * M[q][1] == M[p][1] * M[q][0] for p, q in ((0, 1), (0, 2), (1, 2))
                )
                if det == 0 and not parallel:
                    hits += 1
    return hits


def test_general_position_examples():
    assert general_position(Polygon(DISJOINT_A), Polygon(DISJOINT_B)) == []
    shifted = Polygon([(x + 1, y) for x, y in UNIT_SQUARE])
    found = general_position(Polygon(UNIT_SQUARE), shifted)
    assert found
    assert _brute_concurrences(Polygon(UNIT_SQUARE), shifted) > 0
    s = saw_pair(6, 6)
    assert general_position(s.P, s.Q) == []


coords = st.integers(-1000, 1000)
points = st.tuples(coords, coords)


@given(points, points, points)
def test_orient_antisymmetric(a, b, c):
    a, b, c = pt(*a), pt(*b), pt(*c)
    assert orient(a, b, c) == -orient(b, a, c) == -orient(a, c, b)


@given(points, points, points)
def test_orient_matches_fixed_width_integers(a, b, c):
    arr = np.array([a, b, c], dtype=np.int64)
    d = (arr[1, 0] - arr[0, 0]) * (arr[2, 1] - arr[0, 1]) - (arr[1, 1] - arr[0, 1]) * (arr[2, 0] - arr[0, 0])
    assert int(orient(pt(*a), pt(*b), pt(*c))) == int(np.sign(d))


@given(points, points, points, points)
def test_segment_intersection_symmetric(a, b, c, d):
    if a == b or c == d:
        return
    s, t = seg(a, b), seg(c, d)
    assert segment_intersection(s, t) == segment_intersection(t, s)


@settings(max_examples=60)
@given(st.lists(points, min_size=3, max_size=8, unique=True))
def test_reversal_negates_area(pts):
    p = Polygon(pts)
    assert signed_area(p.reversed()) == -signed_area(p)
