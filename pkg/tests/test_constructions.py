import pytest

from polyoverlap.bounds import convex_value
from polyoverlap.constructions import (
    Kind,
    UnsupportedParameterError,
    construct,
    convex_pair,
    saw_pair,
    special_pair,
)
from polyoverlap.geometry import general_position, is_convex, is_simple
from polyoverlap.overlap import count_components, overlaps, provenance_alternates


@pytest.mark.parametrize("n, m, want", [(6, 6, 9), (4, 4, 4), (7, 6, 9)])
def test_saw_examples(n, m, want):
    assert count_components(saw_pair(n, m)) == want


@pytest.mark.parametrize("n, m", [(3, 5), (5, 3), (2, 8)])
def test_saw_needs_four_sides(n, m):
    with pytest.raises(UnsupportedParameterError):
        saw_pair(n, m)


@pytest.mark.parametrize("n, m, want", [(5, 3, 3), (7, 5, 5), (9, 5, 6), (5, 7, 3)])
def test_convex_examples(n, m, want):
    s = convex_pair(n, m)
    assert is_convex(s.Q)
    assert count_components(s) == want


def test_convex_rejects_small_parameters():
    with pytest.raises(UnsupportedParameterError):
        convex_pair(2, 5)


@pytest.mark.parametrize("kind, want", [("special53", 3), ("special44", 4), ("special55", 5)])
def test_special_scenes(kind, want):
    s = special_pair(kind)
    assert count_components(s) == want
    assert construct(kind)[1].expected_count == want


@pytest.mark.parametrize("n", range(4, 13))
def test_saw_family_invariants(n):
    for m in range(4, n + 1):
        s = saw_pair(n, m)
        assert (s.n, s.m) == (n, m)
        assert is_simple(s.P) and is_simple(s.Q)
        assert general_position(s.P, s.Q) == []
        free = [o for o in overlaps(s) if o.vertex_free]
        assert all(o.side_count == 4 and provenance_alternates(o) for o in free)


@pytest.mark.parametrize("m", range(3, 9))
def test_convex_family_invariants(m):
    for n in range(m, m + 9):
        s = convex_pair(n, m)
        assert (s.n, s.m) == (n, m)
        assert is_convex(s.Q)
        assert general_position(s.P, s.Q) == []
        assert count_components(s) == convex_value(n, m)


def test_generators_are_deterministic():
    assert saw_pair(9, 7) == saw_pair(9, 7)
    assert convex_pair(10, 4) == convex_pair(10, 4)


def test_construct_reports_expected_counts():
    _, spec = construct(Kind.SAW, 8, 6)
    assert spec.expected_count == 12
    _, spec = construct("convex", 9, 5)
    assert spec.expected_count == 6
