import pytest

from powideal.grading import Params


@pytest.fixture
def p_three_two_five():
    return Params(3, 2, 5)


@pytest.fixture
def p_k4():
    return Params(2, 4, 8)


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
