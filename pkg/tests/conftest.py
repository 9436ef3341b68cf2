from fractions import Fraction

import pytest

from polyoverlap import Scene

UNIT_SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
# two equilateral-ish triangles, one pointing up and one down
STAR_UP = [(0, 0), (6, 0), (3, 5)]
STAR_DOWN = [(0, 3), (3, -2), (6, 3)]
DISJOINT_A = [(0, 0), (2, 0), (1, 2)]
DISJOINT_B = [(5, 5), (7, 5), (6, 7)]


@pytest.fixture
def star_of_david() -> Scene:
    return Scene.from_points(STAR_UP, STAR_DOWN)


@pytest.fixture
def disjoint_triangles() -> Scene:
    return Scene.from_points(DISJOINT_A, DISJOINT_B)


@pytest.fixture
def nested_squares() -> Scene:
    lo, hi = Fraction(1, 100), Fraction(99, 100)
    return Scene.from_points(UNIT_SQUARE, [(lo, lo), (hi, lo), (hi, hi), (lo, hi)])
