from __future__ import annotations

import pytest
from conftest import graphs
from hypothesis import given
from oracles import has_odd_cycle

from matchpairs.graph import (
    EdgeSubgraph,
    Graph,
    GraphFormatError,
    complete_graph,
    cycle_graph,
    disjoint_union,
    is_bipartite,
    isolated_vertices,
    iter_graph6,
    parse_edge_list,
    parse_graph6,
    path_graph,
    to_edge_list,
    to_graph6,
)
from matchpairs.structure import spanner_template


def test_graph_normalizes_and_rejects():
    g = Graph(3, [(1, 0), (2, 1)])
    assert g.edges == ((0, 1), (1, 2))
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


# decoded independently with nauty's showg -e
@pytest.mark.parametrize("text, n, edges", [
    ("A_", 2, [(0, 1)]),
    ("@", 1, []),
    ("?", 0, []),
    ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
    ("Ch", 4, [(0, 1), (1, 2), (2, 3)]),
    ("CF", 4, [(0, 3), (1, 3), (2, 3)]),
    ("E?~o", 6, [(0, 4), (0, 5), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)]),
    ("IhC?HC@?G", 10, [(0, 1), (1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (7, 8), (8, 9), (2, 7)]),
])
def test_graph6_reference_values(text, n, edges):
    g = parse_graph6(text)
    assert g.vertex_count == n and set(g.edges) == set(edges)
    assert to_graph6(g) == text


def test_spanner_header():
    assert to_graph6(spanner_template())[0] == "I"


@pytest.mark.parametrize("bad, offset", [
    ("", 0),
    ("~??", 0),       # long form header
    ("A", 1),         # missing adjacency byte
    ("A~", 1),        # padding bits set
    ("A ", 1),        # byte out of range
    ("B\x7f", 1),
])
def test_graph6_errors_name_offset(bad, offset):
    with pytest.raises(GraphFormatError) as info:
        parse_graph6(bad)
    assert info.value.offset == offset
    assert f"offset {offset}" in str(info.value)


def test_to_graph6_size_limit():
    with pytest.raises(ValueError):
        to_graph6(Graph(63, []))


def test_iter_graph6_reports_per_line():
    rows = list(iter_graph6(["A_", "", "zz", "@"]))
    assert [r[0] for r in rows] == [1, 3, 4]
    assert isinstance(rows[1][2], GraphFormatError)


@given(graphs(max_n=62, max_m=60))
def test_graph6_round_trip(g):
    assert parse_graph6(to_graph6(g)) == g


def test_graph6_round_trip_fixture(data_dir):
    for line in (data_dir / "graphs_upto7.g6").read_text().split():
        assert to_graph6(parse_graph6(line)) == line


@given(graphs())
def test_degree_sum(g):
    assert sum(g.degree(v) for v in g.vertices()) == 2 * g.edge_count
    for v in g.vertices():
        assert g.degree(v) == len(g.neighbors(v))


def test_edge_list():
    assert parse_edge_list("2\n0 1") == complete_graph(2)
    assert parse_edge_list("3\n0 1\n1 2\n2 0") == cycle_graph(3)
    assert parse_edge_list("# comment\n3\n0 1  # trailing\n") == Graph(3, [(0, 1)])
    for bad in ("4\n0 1\n0 1", "2\n0 2", "2\n1 1", "", "x\n0 1", "2\n0"):
        with pytest.raises(GraphFormatError):
            parse_edge_list(bad)


@given(graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(to_edge_list(g)) == g


def test_bipartite_examples():
    c4, c3 = cycle_graph(4), cycle_graph(3)
    assert is_bipartite(EdgeSubgraph(c4, frozenset(c4.edges))).bipartite
    res = is_bipartite(EdgeSubgraph(c3, frozenset(c3.edges)))
    assert not res.bipartite and len(res.odd_cycle) - 1 == 3
    assert is_bipartite(EdgeSubgraph(c3, frozenset())).bipartite


def test_edge_subgraph_checks_parent():
    with pytest.raises(ValueError):
        EdgeSubgraph(path_graph(3), frozenset({(0, 2)}))


@given(graphs(max_n=10, max_m=20))
def test_bipartite_witnesses(g):
    res = is_bipartite(EdgeSubgraph(g, frozenset(g.edges)))
    assert res.bipartite == (not has_odd_cycle(g.edges))
    if res.bipartite:
        assert res.odd_cycle is None
        assert all(res.coloring[u] != res.coloring[v] for u, v in g.edges)
    else:
        walk = res.odd_cycle
        assert walk[0] == walk[-1] and (len(walk) - 1) % 2 == 1
        assert all(g.has_edge(a, b) for a, b in zip(walk, walk[1:]))


def test_isolated_vertices():
    assert isolated_vertices(complete_graph(2)) == []
    assert isolated_vertices(Graph(3, [(0, 1)])) == [2]
    assert isolated_vertices(spanner_template()) == []


def test_components_and_union():
    g = disjoint_union(path_graph(3), cycle_graph(3))
    assert g.vertex_count == 6 and g.edge_count == 5
    assert sorted(map(sorted, g.components())) == [[0, 1, 2], [3, 4, 5]]
