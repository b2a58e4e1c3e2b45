import networkx as nx
import pytest

from nlbounds.graph import Graph, from_edges0


def complete(n):
    return from_edges0(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n):
    return from_edges0(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return from_edges0(n, [(i, i + 1) for i in range(n - 1)])


def star(n):
    return from_edges0(n, [(0, i) for i in range(1, n)])


def complete_bipartite(a, b):
    return from_edges0(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def paw():
    # triangle 0-1-2 with a pendant vertex 3 on 0; degrees (3, 2, 2, 1)
    return from_edges0(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def p4():
    return path(4)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
