import io
import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cyclepack.generators import gen_complete, gen_complete_bipartite
from cyclepack.graph import Graph, GraphError, format_edge_list, parse_edge_list, read_edge_list, stats, write_edge_list

from conftest import all_graphs, cycle_graph, path_graph


def test_stats_complete_graph():
    s = stats(gen_complete(4))
    assert (s.d, s.min_degree, s.tau) == (3, 3, 2)
    assert 3 * s.d == 9 and isinstance(s.d, Fraction)


def test_stats_cycle():
    s = stats(cycle_graph(5))
    assert (s.d, s.min_degree, s.tau) == (2, 2, 0)


def test_stats_bipartite_exact():
    s = stats(gen_complete_bipartite(10, 3))
    assert s.d == Fraction(60, 13)
    assert s.tau == 0


def test_stats_rejects_empty_graph():
    with pytest.raises(GraphError, match="empty graph"):
        stats(Graph())


def test_stats_edgeless_has_no_tau():
    s = stats(Graph([0, 1, 2]))
    assert s.tau is None and s.d == 0 and s.min_degree == 0


def test_common_neighbors():
    k4 = gen_complete(4)
    assert k4.common_neighbors(0, 1) == {2, 3}
    assert cycle_graph(6).common_neighbors(0, 1) == set()
    assert gen_complete_bipartite(2, 3).common_neighbors(0, 1) == {2, 3, 4}


def test_common_neighbors_errors():
    with pytest.raises(GraphError):
        gen_complete(3).common_neighbors(0, 7)
    with pytest.raises(GraphError):
        gen_complete(3).common_neighbors(1, 1)


def test_delete_vertex():
    assert gen_complete(4).delete_vertex(2) == Graph([0, 1, 3], [(0, 1), (0, 3), (1, 3)])
    p = cycle_graph(5).delete_vertex(0)
    assert sorted(p.edges()) == [(1, 2), (2, 3), (3, 4)]
    assert Graph([0]).delete_vertex(0).n == 0
    with pytest.raises(GraphError):
        gen_complete(3).delete_vertex(9)


def test_contract_edge_examples():
    k2 = gen_complete(3).contract_edge(0, 1)
    assert (k2.n, k2.m) == (2, 1)
    k3 = gen_complete(4).contract_edge(1, 3)
    assert (k3.n, k3.m) == (3, 3) and 3 not in k3.adj
    c4 = cycle_graph(5).contract_edge(0, 4)
    assert (c4.n, c4.m) == (4, 4) and all(len(nb) == 2 for nb in c4.adj.values())


def test_contract_non_edge_fails():
    with pytest.raises(GraphError):
        cycle_graph(5).contract_edge(0, 2)


@pytest.mark.parametrize("n", range(2, 7))
def test_contraction_edge_count_exhaustive(n):
    for g in all_graphs(n):
        for u, v in g.edges():
            h = g.contract_edge(u, v)
            assert h.m == g.m - 1 - len(g.common_neighbors(u, v))
            assert h.n == g.n - 1
            h.check_invariants()


def test_contraction_edge_count_seven_vertices_sample():
    rng = random.Random(0)
    pairs = list(itertools.combinations(range(7), 2))
    for _ in range(300):
        g = Graph(range(7), [e for e in pairs if rng.random() < 0.5])
        for u, v in g.edges():
            assert g.contract_edge(u, v).m == g.m - 1 - len(g.common_neighbors(u, v))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9)).filter(lambda e: e[0] != e[1]), max_size=30))
def test_mutations_keep_graph_simple(edges):
    g = Graph(range(10), edges)
    g.check_invariants()
    for v in list(g.vertices())[:3]:
        g.delete_vertex(v).check_invariants()
    for u, v in list(g.edges())[:5]:
        g.contract_edge(u, v).check_invariants()


def test_contraction_keeps_smaller_id():
    h = path_graph(3).contract_edge(2, 1)
    assert list(h.vertices()) == [0, 1]


def test_edge_list_parse_and_format():
    g = parse_edge_list("# a comment\n3 1\n1 2\n\n2 3\n7\n1 3\n")
    assert g.n == 4 and g.m == 3 and not g.adj[7]
    assert format_edge_list(g) == "1 2\n1 3\n2 3\n7\n"
    assert parse_edge_list(format_edge_list(g)) == g


@pytest.mark.parametrize("text", ["1 1\n", "1 2 3\n", "a b\n", "-1 2\n", "1.5 2\n"])
def test_edge_list_rejects_bad_lines(text):
    with pytest.raises(GraphError):
        parse_edge_list(text)


def test_edge_list_stream_helpers():
    buf = io.StringIO()
    write_edge_list(gen_complete(3), buf)
    assert read_edge_list(io.StringIO(buf.getvalue())) == gen_complete(3)


@settings(max_examples=100, deadline=None)
@given(st.sets(st.tuples(st.integers(0, 20), st.integers(0, 20)).filter(lambda e: e[0] < e[1])),
       st.sets(st.integers(0, 25)))
def test_edge_list_round_trip(edges, isolated):
    g = Graph(isolated, edges)
    assert parse_edge_list(format_edge_list(g)) == g
