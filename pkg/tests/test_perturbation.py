from dataclasses import replace
from fractions import Fraction

import pytest

from polyoverlap import MalformedInputError
from polyoverlap.geometry import Polygon, general_position
from polyoverlap.oracle import open_component_count
from polyoverlap.perturbation import (
    DeformationCertificate,
    degeneracy_measure,
    move_side,
    offset_limit,
    resolve_degeneracies,
    verify_certificate,
)
from polyoverlap.search import degenerate_scene, trial_rng

from conftest import UNIT_SQUARE


def shifted(ring, dx, dy):
    return [(x + dx, y + dy) for x, y in ring]


def test_general_position_input_gives_identity(star_of_david):
    cert = resolve_degeneracies(star_of_david.P, star_of_david.Q)
    assert cert.steps == ()
    assert cert.after == star_of_david
    assert cert.count_before == cert.count_after == 1
    assert verify_certificate(cert)


def test_shared_side_line():
    cert = resolve_degeneracies(UNIT_SQUARE, shifted(UNIT_SQUARE, 2, 0))
    assert len(cert.steps) >= 1
    assert general_position(cert.after.P, cert.after.Q) == []
    assert verify_certificate(cert)


def test_corner_touching_squares():
    cert = resolve_degeneracies(UNIT_SQUARE, shifted(UNIT_SQUARE, 1, 1))
    assert cert.count_before == 0
    assert cert.count_after >= cert.count_before
    assert cert.count_after in (0, 1)
    assert verify_certificate(cert)


def test_non_simple_input_is_rejected():
    with pytest.raises(MalformedInputError):
        resolve_degeneracies([(0, 0), (1, 1), (1, 0), (0, 1)], UNIT_SQUARE)


def test_move_side_keeps_side_count_and_neighbour_lines():
    sq = Polygon(UNIT_SQUARE)
    moved = move_side(sq, 0, Fraction(1, 4))
    assert len(moved) == 4
    assert list(moved) == [(0, Fraction(-1, 4)), (1, Fraction(-1, 4)), (1, 1), (0, 1)]


def test_offset_across_a_crossing_point_fails_verification():
    P, Q = Polygon(UNIT_SQUARE), Polygon(shifted(UNIT_SQUARE, 2, 0))
    cert = resolve_degeneracies(P, Q)
    assert verify_certificate(cert)
    first = cert.steps[0]
    limit = offset_limit(P, Q, (first.polygon, first.side))
    # an offset far past the nearest point where two other lines meet
    big = replace(first, offset=Fraction(8 * (1 + int(limit))))
    forged = replace(cert, steps=(big,) + cert.steps[1:])
    assert not verify_certificate(forged)


def test_forged_counts_fail_verification():
    cert = resolve_degeneracies(UNIT_SQUARE, shifted(UNIT_SQUARE, 1, 1))
    assert not verify_certificate(replace(cert, count_after=cert.count_after + 1))
    assert not verify_certificate(replace(cert, count_before=cert.count_before + 1))


def test_certificate_json_round_trip():
    cert = resolve_degeneracies(UNIT_SQUARE, shifted(UNIT_SQUARE, 1, 0))
    again = DeformationCertificate.from_json(cert.to_json())
    assert again == cert
    assert verify_certificate(again)


def test_deterministic():
    P, Q = UNIT_SQUARE, shifted(UNIT_SQUARE, 1, 0)
    assert resolve_degeneracies(P, Q).dumps() == resolve_degeneracies(P, Q).dumps()


@pytest.mark.parametrize("index", range(20))
def test_random_degenerate_scenes(index):
    s = degenerate_scene(trial_rng(2024, index))
    cert = resolve_degeneracies(s.P, s.Q)
    assert cert.after.general_position
    assert cert.count_after >= open_component_count(s.P, s.Q)
    assert verify_certificate(cert)
    # every single step keeps or raises the open count
    P, Q = s.P, s.Q
    count = open_component_count(P, Q)
    for step in cert.steps:
        if step.polygon == "P":
            P = move_side(P, step.side, step.offset)
        else:
            Q = move_side(Q, step.side, step.offset)
        nxt = open_component_count(P, Q)
        assert nxt >= count
        count = nxt


def test_measure_counts_extra_lines():
    v = general_position(Polygon(UNIT_SQUARE), Polygon(shifted(UNIT_SQUARE, 1, 0)))
    assert degeneracy_measure(v) > 0
    assert degeneracy_measure([]) == 0
