import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cactusdim.errors import Disconnected, DuplicateEdge, MalformedLine, SelfLoop
from cactusdim.generators import random_cactus
from cactusdim.graph import (
    Graph,
    all_pairs_distances,
    cycle_graph,
    cyclomatic_number,
    parse_edge_list,
    path_graph,
    star_graph,
    to_dot,
    to_edge_list,
    vertex_edge_distance,
)


def test_parse_path():
    g = parse_edge_list("0 1\n1 2")
    assert g.n == 3 and g.m == 2
    assert g.edges == ((0, 1), (1, 2))


def test_parse_comments_blank_lines_and_bytes():
    g = parse_edge_list(b"# a path\n\n0 1\n  # indented comment\n1 2\n")
    assert (g.n, g.m) == (3, 2)


def test_parse_duplicate_edge_names_line():
    with pytest.raises(DuplicateEdge) as exc:
        parse_edge_list("0 1\n1 0")
    assert exc.value.lineno == 2


def test_parse_rejects_disconnected():
    with pytest.raises(Disconnected):
        parse_edge_list("0 1\n2 3")


@pytest.mark.parametrize("text", ["0 1 2", "a b", "0", "-1 2"])
def test_parse_malformed(text):
    with pytest.raises(MalformedLine):
        parse_edge_list(text)


def test_parse_self_loop():
    with pytest.raises(SelfLoop):
        parse_edge_list("0 1\n1 1")


def test_parse_compacts_sparse_ids():
    g = parse_edge_list("10 30\n30 7\n")
    assert g.n == 3
    assert g.labels == (7, 10, 30)
    assert g.has_edge(0, 2) and g.has_edge(1, 2)


def test_single_vertex_header():
    g = parse_edge_list("# n=1\n")
    assert g.n == 1 and g.m == 0


def test_edge_list_round_trip():
    g = random_cactus(12, 2, seed=3)
    h = parse_edge_list(to_edge_list(g, "header line"))
    assert h == g


def test_edge_list_round_trip_sparse_labels():
    g = parse_edge_list("10 30\n30 7\n")
    h = parse_edge_list(to_edge_list(g))
    assert h.labels == g.labels and h == g


def test_distances_examples():
    assert cycle_graph(4).dist[0, 2] == 2
    s = star_graph(4)
    assert all(s.dist[0, v] == 1 for v in range(1, 5))
    assert path_graph(5).dist[0, 4] == 4


def test_vertex_edge_distance_examples():
    assert vertex_edge_distance(cycle_graph(4).dist, 0, (1, 2)) == 1
    assert vertex_edge_distance(cycle_graph(4).dist, 1, (1, 2)) == 0
    assert vertex_edge_distance(path_graph(4).dist, 0, (2, 3)) == 2


def test_edge_dist_table_matches_pointwise():
    g = random_cactus(10, 2, seed=9)
    for row, e in zip(g.edge_dist, g.edges):
        assert all(row[u] == vertex_edge_distance(g.dist, u, e) for u in range(g.n))


def test_cyclomatic_examples(butterfly):
    assert cyclomatic_number(path_graph(6)) == 0
    assert cyclomatic_number(cycle_graph(6)) == 1
    assert cyclomatic_number(butterfly) == 2


def test_graph_rejects_bad_edges():
    with pytest.raises(DuplicateEdge):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(SelfLoop):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 5)])


def test_adjacency_consistent_with_edges():
    g = random_cactus(13, 3, seed=1)
    assert sum(len(a) for a in g.adj) == 2 * g.m
    for u, v in g.edges:
        assert v in g.adj[u] and u in g.adj[v]


def test_dot_export_highlights():
    g = parse_edge_list("5 6\n6 7\n")
    dot = to_dot(g, highlight=[1])
    assert dot.startswith("graph {")
    assert '6 [style=filled, fillcolor="lightblue"];' in dot
    assert "5 -- 6;" in dot


@settings(max_examples=60, deadline=None)
@given(n=st.integers(3, 14), c=st.integers(0, 3), seed=st.integers(0, 2**32))
def test_distance_matrix_is_a_metric(n, c, seed):
    if n < 3 * c:
        c = n // 3
    g = random_cactus(n, c, seed=seed)
    d = all_pairs_distances(g)
    assert (np.diag(d) == 0).all()
    assert (d == d.T).all()
    # triangle inequality over all triples
    assert (d[:, None, :] <= d[:, :, None] + d[None, :, :]).all()
    adj = np.zeros_like(d)
    for u, v in g.edges:
        adj[u, v] = adj[v, u] = 1
    assert ((d == 1) == (adj == 1)).all()
    for e, row in zip(g.edges, g.edge_dist):
        assert all((row[u] == 0) == (u in e) for u in range(g.n))
