import itertools
import sys

import pytest

from weylwalk.lattice import Model, in_chamber, steps


def brute_force_walks(model, u, n):
    """Endpoint -> number of confined walks, by enumerating every step sequence."""
    out = {}
    S = steps(model)
    for seq in itertools.product(S, repeat=n):
        p = list(u)
        for s in seq:
            p = [a + b for a, b in zip(p, s)]
            if not in_chamber(p):
                break
        else:
            out[tuple(p)] = out.get(tuple(p), 0) + 1
    return out


@pytest.fixture
def brute():
    return brute_force_walks


MODELS = [Model.lock_step(2), Model.random_turns(2), Model.lock_step(3), Model.random_turns(3)]
START = {
    (True, 2): (0, 2),
    (False, 2): (0, 1),
    (True, 3): (0, 2, 4),
    (False, 3): (0, 1, 2),
}


def default_start(model):
    return START[(model.is_lock_step, model.k)]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
