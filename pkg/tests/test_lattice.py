import cmath
import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylwalk.lattice import (DomainError, Kind, Model, check_chamber, in_chamber, reachable,
                              step_gen_on_torus, step_gen_value, steps)

ALL_MODELS = [Model(kind, k) for kind in Kind for k in range(1, 6)]


@pytest.mark.parametrize("model", ALL_MODELS, ids=str)
def test_step_set_size(model):
    S = steps(model)
    assert len(S) == len(set(S)) == model.num_steps
    assert model.num_steps == (2**model.k if model.is_lock_step else 2 * model.k)


@pytest.mark.parametrize("model", ALL_MODELS, ids=str)
def test_step_set_closed_under_negation_and_transpositions(model):
    S = set(steps(model))
    assert {tuple(-x for x in s) for s in S} == S
    for i, j in itertools.combinations(range(model.k), 2):
        swapped = set()
        for s in S:
            t = list(s)
            t[i], t[j] = t[j], t[i]
            swapped.add(tuple(t))
        assert swapped == S


@pytest.mark.parametrize("model", ALL_MODELS, ids=str)
def test_zero_drift(model):
    assert all(sum(col) == 0 for col in zip(*steps(model)))


def test_random_turns_k2_steps():
    assert set(steps(Model.random_turns(2))) == {(1, 0), (-1, 0), (0, 1), (0, -1)}


@pytest.mark.parametrize("p,expected", [
    ((0, 1, 2), True), ((0, 0, 2), False), ((2, 1), False), ((5,), True), ((-3, 7), True),
])
def test_in_chamber(p, expected):
    assert in_chamber(p) is expected


def test_check_chamber_raises():
    with pytest.raises(DomainError):
        check_chamber((1, 1))
    assert check_chamber([0, 3]) == (0, 3)


def test_invalid_dimension():
    with pytest.raises(ValueError):
        Model.lock_step(0)


@pytest.mark.parametrize("model,u,v,n,expected", [
    (Model.lock_step(2), (0, 2), (0, 2), 3, False),
    (Model.random_turns(2), (0, 1), (0, 1), 2, True),
    (Model.lock_step(2), (0, 1), (0, 1), 2, False),
    (Model.lock_step(2), (0, 2), (0, 2), 2, True),
    (Model.random_turns(2), (0, 1), (0, 3), 1, False),
    (Model.random_turns(2), (0, 1), (0, 2), 1, True),
    (Model.lock_step(3), (0, 2, 4), (0, 2, 4), 1, False),
])
def test_reachable_examples(model, u, v, n, expected):
    assert reachable(model, u, v, n) is expected


def test_step_gen_values():
    assert step_gen_value(Model.lock_step(3), (1, 1, 1)) == 8
    assert step_gen_value(Model.random_turns(3), (1, 1, 1)) == 6
    with pytest.raises(DomainError):
        step_gen_value(Model.lock_step(2), (1, 0))


finite_complex = st.complex_numbers(min_magnitude=0.2, max_magnitude=3, allow_nan=False, allow_infinity=False)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ALL_MODELS[:8]), st.data())
def test_step_gen_symmetric(model, data):
    z = data.draw(st.lists(finite_complex, min_size=model.k, max_size=model.k))
    perm = data.draw(st.permutations(range(model.k)))
    a = step_gen_value(model, z)
    b = step_gen_value(model, [z[i] for i in perm])
    assert abs(a - b) <= 1e-12 * max(1, abs(a))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ALL_MODELS), st.data())
def test_torus_bound(model, data):
    phi = data.draw(st.lists(st.floats(-cmath.pi, cmath.pi), min_size=model.k, max_size=model.k))
    assert abs(step_gen_on_torus(model, phi)) <= model.num_steps + 1e-9


def test_reachable_is_necessary(brute):
    for model, u in [(Model.lock_step(2), (0, 2)), (Model.random_turns(2), (0, 1))]:
        for n in range(5):
            for v, c in brute(model, u, n).items():
                assert c > 0 and reachable(model, u, v, n)
