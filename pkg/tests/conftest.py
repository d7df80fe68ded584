import os

import hypothesis
import numpy as np
import pytest
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# The paper's introductory 3-objective set a, b, c.
ABC = np.array([[1.0, 3.0, 6.0], [2.0, 2.0, 9.0], [5.0, 4.0, 5.0]])
# Six-objective favour cycle p -> q -> r -> s -> p.
PQRS = np.array(
    [
        [0, 1, 2, 3, 4, 5],
        [1, 2, 2, 3, 4, 0],
        [3, 4, 2, 3, 0, 0],
        [4, 5, 2, 0, 0, 0],
    ],
    dtype=float,
)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def populations(max_n=12, max_k=6, min_k=1, small_ints=True):
    """Point sets; small integer values make ties and dominance common."""
    elements = st.integers(0, 4).map(float) if small_ints else st.floats(-1e3, 1e3, allow_nan=False)
    return st.tuples(st.integers(1, max_n), st.integers(min_k, max_k)).flatmap(
        lambda nk: hnp.arrays(np.float64, nk, elements=elements)
    )


_ACCEPTANCE = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
