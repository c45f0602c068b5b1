import pytest
from hypothesis import settings

from nfpart.field import QuadField

# fixed seeds: every randomized test replays the same examples
settings.register_profile("repro", derandomize=True, max_examples=150, deadline=None)
settings.register_profile("fast", derandomize=True, max_examples=25, deadline=None)
settings.load_profile("repro")


@pytest.fixture
def Q():
    return QuadField(1)


@pytest.fixture
def Q2():
    return QuadField(2)


@pytest.fixture
def Q3():
    return QuadField(3)


@pytest.fixture
def Q5():
    return QuadField(5)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
