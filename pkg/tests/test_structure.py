from itertools import combinations, product

import networkx as nx
import pytest
from hypothesis import given, settings

import oracles
from artin_ah import GraphError, PresentationGraph
from artin_ah.generators import complete, cycle, path, product as join_product, rename, wheel
from artin_ah.structure import (MAX_BIPARTITIONS, Splitting, contains_direct_factor,
                                enumerate_visual_splittings, factors_inside, irreducible_factors,
                                is_2convex, is_irreducible, is_join, minimal_separators,
                                normal_standard_parabolics)
from helpers import graph_and_subset, graphs, mk

fs = frozenset


class TestFactors:
    def test_c4_all_two(self):
        assert irreducible_factors(cycle(4, 2)) == [fs({"v1", "v3"}), fs({"v2", "v4"})]

    @pytest.mark.parametrize("labels", [3, 2, (2, 3, 4, 5, 6, 7), (4, 4, 2, 2, 5, 3)])
    def test_wheel_is_irreducible(self, labels):
        assert is_irreducible(wheel(6, rim=labels, spoke=3))
        if labels != 2:
            assert is_irreducible(wheel(6, rim=3, spoke=labels))

    def test_wheel_with_commuting_hub(self):
        # the hub commutes with the whole rim and splits off as a Z factor
        assert irreducible_factors(wheel(6, rim=3, spoke=2)) == [
            fs({"h"}), fs({f"v{i}" for i in range(1, 7)})]

    def test_edgeless(self):
        assert irreducible_factors(PresentationGraph(["a", "b", "c", "d"])) == [fs("abcd")]

    def test_empty(self):
        with pytest.raises(GraphError):
            irreducible_factors(PresentationGraph([]))

    def test_normal_parabolics(self):
        assert normal_standard_parabolics(wheel(6)) == [fs(), wheel(6).vertex_set]
        assert normal_standard_parabolics(cycle(4, 2)) == [
            fs(), fs({"v1", "v3"}), fs({"v2", "v4"}), fs({"v1", "v2", "v3", "v4"})]
        three = join_product(rename(path(2, 3), "a"), rename(path(2, 3), "b"), rename(path(2, 3), "c"))
        assert len(normal_standard_parabolics(three)) == 8

    def test_contains_factor(self):
        C4 = cycle(4, 2)
        assert contains_direct_factor(C4, {"v1", "v3"})
        assert not contains_direct_factor(C4, {"v1", "v2"})
        assert factors_inside(C4, {"v1", "v3", "v2"}) == [fs({"v1", "v3"})]
        W6 = wheel(6)
        assert not any(contains_direct_factor(W6, S) for S in combinations(W6.vertices, 6))


class TestJoin:
    def test_examples(self):
        assert is_join(cycle(4, 5)) == (fs({"v1", "v3"}), fs({"v2", "v4"}))
        assert is_join(cycle(5, 3)) is None
        assert is_join(mk("a b c", ("a", "b", 3), ("b", "c", 3))) == (fs("b"), fs("ac"))

    def test_too_small(self):
        with pytest.raises(GraphError):
            is_join(PresentationGraph(["a"]))

    @settings(max_examples=200, deadline=None)
    @given(graphs(min_vertices=2, max_vertices=6))
    def test_against_complement(self, G):
        comp = nx.complement(oracles.finite_graph(G))
        parts = is_join(G)
        assert (parts is None) == nx.is_connected(comp)
        if parts:
            a, b = parts
            assert a | b == G.vertex_set and not a & b
            assert all(G.adjacent(u, v) for u in a for v in b)


class TestSplittings:
    def test_clique_has_none(self):
        for n in range(1, 6):
            assert enumerate_visual_splittings(complete(n, 3)) == []
            assert enumerate_visual_splittings(complete(n, 3), "pairs") == []

    def test_path_pairs(self):
        sp = enumerate_visual_splittings(mk("a b c", ("a", "b", 3), ("b", "c", 3)), "pairs")
        assert sp == [Splitting(fs("ab"), fs("bc"), fs("b"))]

    def test_w6_separator(self):
        W6 = wheel(6)
        omega = fs({"v1", "h", "v4"})
        assert omega in minimal_separators(W6)
        over = [s for s in enumerate_visual_splittings(W6) if s.omega == omega]
        assert len(over) == 1
        s = over[0]
        assert {s.gamma1 - omega, s.gamma2 - omega} == {fs({"v2", "v3"}), fs({"v5", "v6"})}

    def test_disconnected_has_empty_separator(self):
        G = mk("a b c", ("a", "b", 3))
        assert fs() in minimal_separators(G)
        assert Splitting(fs("ab"), fs("c"), fs()) in enumerate_visual_splittings(G)

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            enumerate_visual_splittings(path(3), "bogus")

    def test_all_mode_cap(self):
        with pytest.raises(GraphError):
            enumerate_visual_splittings(PresentationGraph([f"x{i}" for i in range(15)]), "all")

    def test_bipartition_cap_leaves_note(self):
        star = PresentationGraph(["c", *(f"x{i}" for i in range(14))],
                                 {("c", f"x{i}"): 3 for i in range(14)})
        out = enumerate_visual_splittings(star)
        assert 2 ** 13 - 1 > MAX_BIPARTITIONS
        assert len(out) == 14 and out.notes
        assert all(s.is_valid(star) for s in out)

    def test_validate(self):
        G = path(3)
        with pytest.raises(GraphError):
            Splitting(fs({"v1", "v2"}), fs({"v2"}), fs({"v2"})).validate(G)
        with pytest.raises(GraphError):
            Splitting(fs({"v1"}), fs({"v2", "v3"}), fs()).validate(G)


def _brute_minimal_separators(G):
    H = oracles.finite_graph(G)
    V = set(G.vertices)
    out = set()
    for k in range(len(V) - 1):
        for S in combinations(sorted(V), k):
            S = set(S)
            rest = H.subgraph(V - S)
            full = [C for C in nx.connected_components(rest) if all(set(H[s]) & C for s in S)]
            if len(full) >= 2:
                out.add(fs(S))
    return out


def _brute_splittings(G):
    V = list(G.vertices)
    out = set()
    for sides in product((0, 1, 2), repeat=len(V)):
        g1 = fs(v for v, s in zip(V, sides) if s != 1)
        g2 = fs(v for v, s in zip(V, sides) if s != 0)
        if oracles.valid_splitting(G, g1, g2, g1 & g2):
            out.add(fs({g1, g2}))
    return out


@settings(max_examples=300, deadline=None)
@given(graphs(max_vertices=7, labels=(2, 3, float("inf"))))
def test_minimal_separators_brute(G):
    assert set(minimal_separators(G)) == _brute_minimal_separators(G)


@settings(max_examples=150, deadline=None)
@given(graphs(max_vertices=6, labels=(3, float("inf"))))
def test_all_mode_is_exhaustive(G):
    got = enumerate_visual_splittings(G, "all")
    assert {fs({s.gamma1, s.gamma2}) for s in got} == _brute_splittings(G)
    assert len(got) == len({fs({s.gamma1, s.gamma2}) for s in got})


@settings(max_examples=300, deadline=None)
@given(graphs(max_vertices=7))
def test_modes_are_valid_sorted_and_exist_iff_not_clique(G):
    for mode in ("pairs", "min-sep", "all"):
        got = enumerate_visual_splittings(G, mode)
        assert all(oracles.valid_splitting(G, s.gamma1, s.gamma2, s.omega) for s in got)
        assert [s.sort_key() for s in got] == sorted(s.sort_key() for s in got)
        assert bool(got) == (not oracles.is_clique(G))


@settings(max_examples=300, deadline=None)
@given(graph_and_subset(max_vertices=7))
def test_2convex_oracle(GS):
    G, S = GS
    assert is_2convex(G, S) == oracles.two_convex(G, S)


def test_2convex_examples():
    assert is_2convex(wheel(6), {"v1", "h", "v4"})
    assert not is_2convex(path(3), {"v1", "v3"})
    assert is_2convex(complete(4), {"v1", "v2", "v3"})
    assert not is_2convex(wheel(6), {"v1", "v3"})
