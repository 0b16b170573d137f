import math

import networkx as nx
import pytest
from hypothesis import given, settings

import oracles
from artin_ah import INF, GraphError, ParseError, PresentationGraph
from artin_ah.generators import complete, cycle, path, wheel
from artin_ah.graph import (distance2_pairs, dynkin_view, graph_from_dict, induced_subgraph,
                            is_clique, parse_graph, parse_json_graph, serialize_graph,
                            serialize_json_graph)
from helpers import graph_and_subset, graphs, mk


class TestParse:
    def test_single_edge(self):
        G = parse_graph("vertices: a b\nedge a b 3")
        assert G.vertices == ("a", "b") and G.label("a", "b") == 3

    def test_absent_pair_is_infinite(self):
        G = parse_graph("vertices: a b")
        assert len(G) == 2 and G.label("a", "b") == INF and not G.adjacent("a", "b")

    def test_self_edge(self):
        with pytest.raises(ParseError, match="self-edge") as exc:
            parse_graph("vertices: a\nedge a a 3")
        assert exc.value.line == 2

    def test_comments_and_inf_edge(self):
        G = parse_graph("# header\nvertices: a b c  # three\n\nedge a b inf\nedge b c 4\n")
        assert G.label("a", "b") == INF and G.label("c", "b") == 4

    @pytest.mark.parametrize("text, fragment", [
        ("edge a b 3\nvertices: a b", "before"),
        ("vertices: a b\nvertices: c", "second"),
        ("vertices: a b\nedge a c 3", "unknown vertex"),
        ("vertices: a b\nedge a b 1", "< 2"),
        ("vertices: a b\nedge a b x", "not an integer"),
        ("vertices: a b\nedge a b 3\nedge b a 4", "duplicate edge"),
        ("vertices: a a", "duplicate vertex"),
        ("vertices: a b\nedge a b", "malformed"),
        ("", "missing"),
    ])
    def test_errors(self, text, fragment):
        with pytest.raises(ParseError, match=fragment):
            parse_graph(text)

    def test_error_carries_line(self):
        with pytest.raises(ParseError) as exc:
            parse_graph("vertices: a b\n\nedge a b 0\n")
        assert exc.value.line == 3 and str(exc.value).startswith("line 3:")

    def test_json_errors(self):
        for doc in ('{"edges": []}', '{"vertices": ["a","b"], "edges": [["a","b",1]]}',
                    '{"vertices": ["a","b"], "edges": [["a","b","x"]]}', "[1,"):
            with pytest.raises(ParseError):
                parse_json_graph(doc)

    def test_json_inf(self):
        G = graph_from_dict({"vertices": ["a", "b", "c"], "edges": [["a", "b", "inf"], ["b", "c", 5]]})
        assert G.label("a", "b") == INF and G.label("b", "c") == 5


class TestGraph:
    def test_immutable(self):
        G = mk("a b", ("a", "b", 3))
        with pytest.raises(AttributeError):
            G.vertices = ("x",)

    def test_label_validation(self):
        for bad in (1, 2.5, True, -3):
            with pytest.raises(GraphError):
                PresentationGraph(["a", "b"], {("a", "b"): bad})
        with pytest.raises(GraphError):
            PresentationGraph(["a", "b"], {("a", "b"): 3, ("b", "a"): 4})
        with pytest.raises(GraphError):
            PresentationGraph(["a", ""])

    def test_equality_ignores_input_order(self):
        assert mk("b a", ("b", "a", 3)) == mk("a b", ("a", "b", 3))
        assert hash(mk("b a", ("b", "a", 3))) == hash(mk("a b", ("a", "b", 3)))
        assert mk("a b", ("a", "b", 3)) != mk("a b", ("a", "b", 4))

    def test_induced(self):
        K3 = complete(3, 3)
        H = induced_subgraph(K3, {"v1", "v2"})
        assert H.vertices == ("v1", "v2") and H.label("v1", "v2") == 3
        assert induced_subgraph(K3, K3.vertices) == K3
        assert len(induced_subgraph(K3, ())) == 0
        with pytest.raises(GraphError):
            induced_subgraph(K3, {"zz"})

    def test_dynkin_view(self):
        C4 = cycle(4, 2)
        assert dynkin_view(C4).edges == {("v1", "v3"), ("v2", "v4")}
        K3 = complete(3, (2, 3, 3))
        assert dynkin_view(K3).edges == {("v1", "v3"), ("v2", "v3")}
        E = PresentationGraph(["a", "b", "c", "d"])
        assert len(dynkin_view(E).edges) == 6

    def test_distance2_examples(self):
        W6 = wheel(6)
        assert distance2_pairs(W6, {"v1", "h", "v4"}) == {("v1", "v4"): frozenset({"h"})}
        assert distance2_pairs(complete(4), {"v1", "v2", "v3"}) == {}
        assert distance2_pairs(path(3), {"v1", "v3"}) == {("v1", "v3"): frozenset({"v2"})}

    def test_is_clique_examples(self):
        assert is_clique(complete(3, (2, 3, 3)))
        assert not is_clique(cycle(4, 2))
        assert is_clique(cycle(4), {"v1"}) and is_clique(cycle(4), ())


@settings(max_examples=200, deadline=None)
@given(graphs(max_vertices=7))
def test_text_and_json_round_trip(G):
    assert parse_graph(serialize_graph(G)) == G
    assert parse_json_graph(serialize_json_graph(G)) == G


@settings(max_examples=200, deadline=None)
@given(graph_and_subset(max_vertices=7))
def test_distance2_against_bfs(GS):
    G, S = GS
    H = oracles.finite_graph(G)
    dist = dict(nx.all_pairs_shortest_path_length(H))
    expected = {}
    for u in sorted(S):
        for w in sorted(S):
            if u < w and dist[u].get(w) == 2:
                expected[(u, w)] = frozenset(set(H[u]) & set(H[w]))
    assert distance2_pairs(G, S) == expected


@settings(max_examples=200, deadline=None)
@given(graph_and_subset(max_vertices=7))
def test_is_clique_against_oracle(GS):
    G, S = GS
    assert is_clique(G, S) == oracles.is_clique(G, S)


@settings(max_examples=100, deadline=None)
@given(graphs(max_vertices=6))
def test_dynkin_edges_are_non_two_pairs(G):
    D = dynkin_view(G)
    for u in G.vertices:
        for v in G.vertices:
            if u < v:
                m = G.label(u, v)
                assert D.adjacent(u, v) == (m != 2)
                assert math.isinf(m) == (not G.adjacent(u, v))
