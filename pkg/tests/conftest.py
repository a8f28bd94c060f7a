import itertools
import sys

import pytest

from polyind import Graph, base_graph


def complete(n):
    return Graph(n, itertools.combinations(range(n), 2))


CUBE_EDGES = [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)]


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def cube_graph():
    return Graph(8, CUBE_EDGES)


@pytest.fixture
def cube():
    return base_graph("cube")


@pytest.fixture
def pdw():
    return base_graph("pdw10")


@pytest.fixture
def octahedron():
    # 0/1, 2/3, 4/5 are the antipodal pairs
    return Graph(6, [(u, v) for u, v in itertools.combinations(range(6), 2) if u // 2 != v // 2])


@pytest.fixture
def bipyramid():
    return Graph(5, [(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2), (4, 0), (4, 1), (4, 2)])


@pytest.fixture
def square_pyramid_graph():
    return Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
