import numpy as np
import pytest

from circle_wigner import StateParams, make_state, normalize

ACCEPTANCE_LINES = []


@pytest.fixture
def limit_state():
    """lam -> 0, eps = 1/2: psi = (1 + e^{i theta}) / sqrt(4 pi) up to e^{-500} corrections."""
    return make_state(1e-3, eps=0.5)


@pytest.fixture
def generic_state():
    return make_state(0.5, eps=0.3, l=2)


@pytest.fixture
def wide_state():
    return normalize(StateParams.from_q(0.5, eps=0.0))


@pytest.fixture
def narrow_state():
    return normalize(StateParams.from_q(0.001, eps=0.5))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
