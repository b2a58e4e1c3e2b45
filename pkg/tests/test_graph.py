import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nlbounds.errors import (
    Disconnected,
    DuplicateEdge,
    IsolatedVertex,
    NotGraphical,
    ParseError,
    SelfLoop,
    VertexOutOfRange,
)
from nlbounds.graph import (
    DegreeSequence,
    degree_sequence,
    format_edge_list,
    from_edge_list,
    from_edges0,
    is_bipartite,
    is_connected,
    is_graphical,
    parse_degree_sequence,
    parse_edge_list,
)

from conftest import complete, cycle, path, star, to_nx


def test_from_edge_list_one_based():
    g = from_edge_list([(1, 2), (2, 3), (3, 4), (4, 1)], 4)
    assert g.n == 4 and g.m == 4
    assert g.edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    assert g.degrees == (2, 2, 2, 2)


@pytest.mark.parametrize(
    "pairs, n, exc",
    [
        ([(1, 1), (1, 2)], 2, SelfLoop),
        ([(1, 2), (2, 1)], 2, DuplicateEdge),
        ([(1, 5)], 4, VertexOutOfRange),
        ([(0, 1)], 2, VertexOutOfRange),
        ([(1, 2)], 3, IsolatedVertex),
        ([(1, 2), (3, 4)], 4, Disconnected),
    ],
)
def test_invalid_edge_lists(pairs, n, exc):
    with pytest.raises(exc):
        from_edge_list(pairs, n)


def test_disconnected_allowed_when_asked():
    g = from_edge_list([(1, 2), (3, 4)], 4, require_connected=False)
    assert not is_connected(g)


def test_handshake():
    g = complete(6)
    assert sum(g.degrees) == 2 * g.m == 30


def test_bipartite_examples():
    assert is_bipartite(cycle(6))
    assert not is_bipartite(cycle(5))
    assert is_bipartite(path(7))
    assert is_bipartite(star(5))
    assert not is_bipartite(complete(3))


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 14), st.floats(0.1, 0.9), st.integers(0, 2**32 - 1))
def test_connectivity_and_bipartiteness_match_networkx(n, q, seed):
    h = nx.gnp_random_graph(n, q, seed=seed)
    g = from_edges0(n, h.edges(), require_connected=False, allow_isolated=True)
    assert is_connected(g) == nx.is_connected(h)
    assert is_bipartite(g) == nx.is_bipartite(h)


def test_degree_sequence_pendant_count():
    ds = DegreeSequence((1, 3, 1, 2, 1))
    assert ds.values == (3, 2, 1, 1, 1)
    assert ds.pendant_count == 3
    assert ds[1] == 3 and ds[5] == 1
    assert ds.m == 4


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 7), min_size=1, max_size=9))
def test_erdos_gallai_matches_networkx(seq):
    assert is_graphical(seq) == nx.is_graphical(seq, method="eg")


def test_parse_edge_list_roundtrip():
    g = cycle(5)
    text = format_edge_list(g, "five cycle")
    assert text.startswith("# five cycle\n5 5\n")
    assert parse_edge_list(text) == g


@pytest.mark.parametrize(
    "text, exc",
    [
        ("", ParseError),
        ("3 2\n1 2\n", ParseError),
        ("3 2\n1 x\n2 3\n", ParseError),
        ("2 1\n1 2 3\n", ParseError),
        ("4 2\n1 2\n3 4\n", Disconnected),
    ],
)
def test_parse_edge_list_errors(text, exc):
    with pytest.raises(exc):
        parse_edge_list(text)


def test_parse_degree_sequence():
    ds = parse_degree_sequence("1, 2,1")
    assert ds.values == (2, 1, 1)
    with pytest.raises(NotGraphical):
        parse_degree_sequence("3,1,1")
    with pytest.raises(IsolatedVertex):
        parse_degree_sequence("2,1,1,0")
    with pytest.raises(ParseError):
        parse_degree_sequence("2;1;1")


def test_relabel_keeps_degree_multiset():
    g = path(5)
    h = g.relabel([4, 3, 2, 1, 0])
    assert degree_sequence(h) == degree_sequence(g)
    assert nx.is_isomorphic(to_nx(g), to_nx(h))
