import pytest

from artinkernel import Character, Graph
from artinkernel.generators import complete_graph, cone, cycle_graph, path_graph, suspension


def char(g, values):
    """Character from values listed in the graph's sorted vertex order."""
    return Character(dict(zip(g.vertices, values)))


@pytest.fixture
def c4():
    # a-b-c-d-a; in sorted order the values read (a, b, c, d)
    return cycle_graph("abcd")


@pytest.fixture
def path3():
    return path_graph("abc")


@pytest.fixture
def two_triangles():
    """Triangles abv and vcd sharing v; sorted order is a, b, c, d, v."""
    return Graph("abvcd", [("a", "b"), ("a", "v"), ("b", "v"), ("v", "c"), ("v", "d"), ("c", "d")])


@pytest.fixture
def diamond():
    """Two triangles sharing the edge uv."""
    return Graph("auvb", [("a", "u"), ("a", "v"), ("u", "v"), ("u", "b"), ("v", "b")])


@pytest.fixture
def k4():
    return complete_graph("abcd")


@pytest.fixture
def wheel4():
    """Four-cycle a-b-c-d plus an apex x joined to every rim vertex."""
    return cone(cycle_graph("abcd"), "x")


@pytest.fixture
def octahedron():
    return suspension(cycle_graph("abcd"))


def pytest_terminal_summary(terminalreporter):
    from tests.acceptance_report import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(LINES):
            terminalreporter.write_line(LINES[k])
