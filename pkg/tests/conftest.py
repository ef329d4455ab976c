import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from shlat import rv, space_from_weights, uniform_space

settings.register_profile("default", max_examples=150, deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

DATA = Path(__file__).resolve().parent.parent / "data"


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "REPORT", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def two_bits():
    """Two fair bits on four equiprobable outcomes, plus their parity."""
    space = uniform_space(4)
    return {
        "space": space,
        "X": rv(space, ["00", "01", "10", "11"], "X"),
        "X1": rv(space, [0, 0, 1, 1], "X1"),
        "X2": rv(space, [0, 1, 0, 1], "X2"),
        "X3": rv(space, [0, 1, 1, 0], "X3"),
    }


@pytest.fixture
def divisors():
    space = uniform_space(12)
    return {
        "space": space,
        "X": rv(space, list(range(12)), "X"),
        "X1": rv(space, [x // 2 for x in range(12)], "X1"),
        "X2": rv(space, [x // 3 for x in range(12)], "X2"),
    }


@pytest.fixture
def nondist():
    space = uniform_space(4)
    return {
        "X": rv(space, [0, 1, 0, 1], "X"),
        "Z1": rv(space, [1, 1, 2, 2], "Z1"),
        "Z2": rv(space, [2, 1, 1, 2], "Z2"),
    }


@st.composite
def spaces(draw, max_outcomes=8, zeros=True):
    n = draw(st.integers(1, max_outcomes))
    weights = draw(st.lists(st.integers(0 if zeros else 1, 6), min_size=n, max_size=n))
    if not any(weights):
        weights[0] = 1
    return space_from_weights(weights)


@st.composite
def variables(draw, space, max_values=5):
    return rv(space, draw(st.lists(st.integers(0, max_values - 1), min_size=len(space.outcomes), max_size=len(space.outcomes))))


@st.composite
def variable_tuples(draw, k=2, max_outcomes=8, max_values=5):
    space = draw(spaces(max_outcomes))
    return tuple(draw(variables(space, max_values)) for _ in range(k))


def fr(s):
    return Fraction(s)
