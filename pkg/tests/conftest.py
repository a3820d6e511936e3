import pytest

from cactusdim.graph import Graph, cycle_graph

# Butterfly: triangles x-a-b and x-c-d sharing x.
X, A, B, C, D = 0, 1, 2, 3, 4
BUTTERFLY_EDGES = [(X, A), (A, B), (B, X), (X, C), (C, D), (D, X)]

_acceptance_lines: list[str] = []


@pytest.fixture
def butterfly():
    return Graph(5, BUTTERFLY_EDGES)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def acceptance_log():
    return _acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
