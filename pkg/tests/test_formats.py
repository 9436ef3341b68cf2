import json
from fractions import Fraction

import pytest

from polyoverlap import MalformedInputError, dumps_scene, loads_scene
from polyoverlap.constructions import saw_pair


def test_round_trip_is_identity_on_canonical_text():
    text = dumps_scene(saw_pair(5, 4))
    assert dumps_scene(loads_scene(text)) == text


def test_integers_may_omit_denominator():
    s = loads_scene('{"P": [[0, 0], ["4", 0], [0, "4"]], "Q": [["1/2", "1/2"], [1, "1/2"], ["1/2", 1]]}')
    assert s.Q[0].x == Fraction(1, 2)
    assert json.loads(dumps_scene(s))["P"][1] == ["4", "0"]


def test_clockwise_input_is_reoriented():
    s = loads_scene('{"P": [[0,0],[0,4],[4,0]], "Q": [[5,5],[6,5],[5,6]]}')
    assert [tuple(v) for v in s.P] == [(4, 0), (0, 4), (0, 0)]


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        '{"P": [[0,0],[1,0],[0,1]]}',
        '{"P": [[0,0],[1,0],[0,1]], "Q": [[0.5,0],[1,0],[0,1]]}',
        '{"P": [[0,0],[1,0],[0,1]], "Q": [["0.5",0],[1,0],[0,1]]}',
        '{"P": [[0,0],[1,0]], "Q": [[0,0],[1,0],[0,1]]}',
        '{"P": [[0,0],[1,0],[0,1]], "Q": [["1/0",0],[1,0],[0,1]]}',
    ],
)
def test_malformed_documents(text):
    with pytest.raises(MalformedInputError):
        loads_scene(text)
