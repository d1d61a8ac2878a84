import itertools
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylwalk._perm import signed_permutations
from weylwalk.counting import (MAX_REFLECTION_K, CountWindow, count_confined_dp, count_confined_reflection,
                               count_free, count_free_endpoint, confined_layer, signed_reflection_sum)
from weylwalk.lattice import DomainError, Model, steps

from conftest import MODELS, default_start


def _inversions(p):
    return sum(1 for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j])


@pytest.mark.parametrize("k", range(1, 6))
def test_signed_permutations(k):
    seen = list(signed_permutations(k))
    assert len(seen) == len({p for p, _ in seen}) == len(list(itertools.permutations(range(k))))
    for p, s in seen:
        assert s == (-1) ** _inversions(p)
    # minimal change: consecutive permutations differ by one adjacent swap
    for (a, _), (b, _) in zip(seen, seen[1:]):
        diff = [i for i in range(k) if a[i] != b[i]]
        assert len(diff) == 2 and diff[1] == diff[0] + 1


@pytest.mark.parametrize("model,u,v,n,expected", [
    (Model.random_turns(2), (0, 1), (0, 1), 2, 2),
    (Model.lock_step(2), (0, 2), (0, 2), 2, 3),
    (Model.lock_step(3), (0, 2, 4), (0, 2, 4), 1, 0),
    (Model.lock_step(1), (0,), (0,), 4, 6),
])
def test_confined_examples(model, u, v, n, expected):
    assert count_confined_reflection(model, u, v, n) == expected
    assert count_confined_dp(model, u, v, n) == expected


@pytest.mark.parametrize("model,u,n,expected", [
    (Model.lock_step(2), (0, 2), 1, 3),
    (Model.random_turns(2), (0, 1), 1, 2),
    (Model.lock_step(2), (0, 2), 0, 1),
    (Model.random_turns(1), (5,), 7, 2**7),
])
def test_free_endpoint_examples(model, u, n, expected):
    assert count_free_endpoint(model, u, n, "dp") == expected
    assert count_free_endpoint(model, u, n, "reflection_sum") == expected


def test_lock_step_k2_free_endpoint_closed_form():
    # two non-crossing paths at distance 2: C(2n, n) + C(2n, n+1)
    for n in (1, 5, 40, 150):
        assert count_free_endpoint(Model.lock_step(2), (0, 2), n) == comb(2 * n, n) + comb(2 * n, n + 1)


@pytest.mark.parametrize("model", MODELS, ids=str)
@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_dp_matches_brute_force(model, n, brute):
    if model.num_steps**n > 5000:
        pytest.skip("enumeration too large")
    u = default_start(model)
    assert confined_layer(model, u, n) == brute(model, u, n)


@pytest.mark.parametrize("model,u,v,n,expected", [
    (Model.random_turns(2), (0, 1), (0, 1), 2, 4),
    (Model.lock_step(2), (0, 2), (0, 2), 2, 4),
    (Model.lock_step(3), (0, 2, 4), (0, 2, 4), 0, 1),
    (Model.random_turns(2), (0, 1), (0, 1), 0, 1),
])
def test_count_free_examples(model, u, v, n, expected):
    assert count_free(model, u, v, n) == expected


def test_count_free_lock_step_product():
    assert count_free(Model.lock_step(2), (0, 0), (2, -2), 4) == comb(4, 3) ** 2


def test_count_free_random_turns_brute():
    # free counts equal brute-force counts of unconfined walks
    model = Model.random_turns(3)
    for n in range(5):
        totals = {}
        for seq in itertools.product(steps(model), repeat=n):
            end = tuple(sum(c) for c in zip(*seq)) if seq else (0, 0, 0)
            totals[end] = totals.get(end, 0) + 1
        for end, c in totals.items():
            assert count_free(model, (0, 0, 0), end, n) == c


def test_count_free_length_mismatch():
    with pytest.raises(ValueError):
        count_free(Model.lock_step(2), (0, 1), (0, 1, 2), 2)


def test_reflection_rejects_outside_chamber():
    with pytest.raises(DomainError):
        count_confined_reflection(Model.lock_step(2), (2, 0), (0, 2), 2)
    with pytest.raises(DomainError):
        count_free_endpoint(Model.lock_step(2), (0, 0), 3)


def test_reflection_k_limit():
    k = MAX_REFLECTION_K + 1
    with pytest.raises(ValueError):
        signed_reflection_sum(Model.random_turns(k), tuple(range(k)), tuple(range(k)), 2)


def test_window_points():
    w = CountWindow.for_walk((0, 2), 1)
    pts = list(w.chamber_points())
    assert pts == sorted(pts) and all(a < b for a, b in pts)
    assert (-1, 3) in pts and (1, 1) not in pts
    assert w.contains((1, 1)) and not w.contains((2, 4))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(MODELS), st.integers(0, 6), st.data())
def test_reflection_equals_dp_random(model, n, data):
    base = default_start(model)
    shift = data.draw(st.integers(-3, 3))
    u = tuple(x + shift for x in base)
    layer = confined_layer(model, u, n)
    v = data.draw(st.sampled_from(sorted(layer))) if layer else u
    assert count_confined_reflection(model, u, v, n) == layer.get(v, 0)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(MODELS), st.integers(0, 8))
def test_counts_translation_invariant(model, n):
    u = default_start(model)
    t = 2 if model.is_lock_step else 1
    a = count_free_endpoint(model, u, n)
    b = count_free_endpoint(model, tuple(x + t for x in u), n)
    assert a == b


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(MODELS), st.integers(1, 8))
def test_time_reversal_symmetry(model, n):
    u = default_start(model)
    layer = confined_layer(model, u, n)
    for v, c in list(layer.items())[:5]:
        assert count_confined_reflection(model, v, u, n) == c
