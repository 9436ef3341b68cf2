import numpy as np
import pytest

from polyoverlap.constructions import convex_pair, saw_pair, special_pair
from polyoverlap.geometry import is_convex
from polyoverlap.search import (
    degenerate_scene,
    hill_climb,
    random_convex_polygon,
    random_scene,
    random_search,
    result_json,
    trial_rng,
)


def test_triangles_meet_at_most_once():
    r = random_search(3, 3, 300, seed=4)
    assert r.best_count <= 1 and not r.violations


def test_search_is_reproducible():
    a = random_search(5, 4, 150, seed=9)
    b = random_search(5, 4, 150, seed=9)
    assert result_json(a) == result_json(b)
    assert a.best_scene == b.best_scene


def test_trials_must_be_positive():
    with pytest.raises(ValueError):
        random_search(4, 4, 0, seed=1)


def test_trial_streams_are_independent_of_order():
    first = random_scene(6, 5, trial_rng(3, 17))
    for t in range(5):
        random_scene(6, 5, trial_rng(3, t))
    assert random_scene(6, 5, trial_rng(3, 17)) == first


def test_convex_generator():
    rng = np.random.default_rng(0)
    for m in range(3, 10):
        q = random_convex_polygon(m, rng)
        assert len(q) == m and is_convex(q)


def test_convex_search_respects_convex_value():
    r = random_search(7, 4, 200, seed=2, convex_q=True)
    assert r.best_count <= 5


def test_degenerate_samples_are_perturbed():
    s = degenerate_scene(trial_rng(0, 0))
    assert not s.general_position


def test_hill_climb_without_budget():
    r = hill_climb(saw_pair(6, 6), 0, seed=1)
    assert r.best_count == 9


@pytest.mark.slow
def test_hill_climb_special55():
    r = hill_climb(special_pair("special55"), 10_000, seed=1)
    assert r.best_count == 5 and not r.violations


@pytest.mark.slow
def test_hill_climb_convex_9_5():
    r = hill_climb(convex_pair(9, 5), 10_000, seed=1, convex_q=True)
    assert r.best_count == 6
    assert is_convex(r.best_scene.Q)


@pytest.mark.slow
def test_hill_climb_saw_7_7():
    r = hill_climb(saw_pair(7, 7), 2_000, seed=1)
    assert 9 <= r.best_count <= 12
