import numpy as np
import pytest
from hypothesis import strategies as st

from fuzzy_euler import FuzzyNumber, triangular

LEVELS = np.linspace(0.0, 1.0, 11)

finite = st.floats(min_value=-50, max_value=50, allow_nan=False, allow_infinity=False)
increments = st.lists(
    st.floats(min_value=0, max_value=3, allow_nan=False, allow_infinity=False),
    min_size=LEVELS.size - 1,
    max_size=LEVELS.size - 1,
)


@st.composite
def fuzzy_numbers(draw, levels=LEVELS):
    """Nested alpha-cuts built from a core interval and nonnegative widenings."""
    center = draw(finite)
    half_core = draw(st.floats(min_value=0, max_value=2))
    rise = np.array(draw(increments))
    fall = np.array(draw(increments))
    lower = center - half_core - np.append(np.cumsum(rise[::-1])[::-1], 0.0)
    upper = center + half_core + np.append(np.cumsum(fall[::-1])[::-1], 0.0)
    return FuzzyNumber(levels, lower, upper)


scalars = st.floats(min_value=-20, max_value=20, allow_nan=False, allow_infinity=False)
nonneg_scalars = st.floats(min_value=0, max_value=20, allow_nan=False, allow_infinity=False)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def unit_triangle():
    return triangular(0.0, 1.0, 2.0)


def cut(u, alpha):
    return u.alpha_cut(alpha)


# one line per acceptance criterion, filled by test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
