import pytest

from rcled.cli import parse_path

EXAMPLE_A = "1111.11.2.1122.1222.1.2.22"
EXAMPLE_B = ("122.11112.112.22.2.12.22.111112.2.12."
             "2.2.11112.11.122222.1.2222.111122.1122.22."
             "2.122222.12.12222.1122.1122.1.122.112222.1."
             "2.1112.1.12.122.12222.2.1122.122.1")

ACCEPTANCE_LINES = []


@pytest.fixture
def path_a():
    return parse_path(EXAMPLE_A)


@pytest.fixture
def path_b():
    return parse_path(EXAMPLE_B)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
