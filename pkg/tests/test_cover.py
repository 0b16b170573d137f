import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from artin_ah import GraphError
from artin_ah.cliques import maximal_cliques
from artin_ah.cover import (cliques_cover, cliques_plus_cover, explicit_cover, generated_cover,
                            hollow_cover, is_flag, link_complex, validate_cover)
from artin_ah.generators import complete, cycle, wheel
from helpers import graphs

fs = frozenset


def test_cliques_cover_is_valid():
    for G in (wheel(6), cycle(5), complete(4)):
        assert validate_cover(cliques_cover(G))


def test_explicit_k3_without_triangle_is_valid():
    K3 = complete(3)
    U = explicit_cover(K3, [(), ("v1",), ("v2",), ("v3",), ("v1", "v2"), ("v2", "v3"), ("v1", "v3")])
    assert validate_cover(U)
    L = link_complex(U)
    assert len(L.edges) == 3 and not L.spans_simplex(K3.vertices)


def test_missing_edge_is_reported():
    K3 = complete(3)
    U = explicit_cover(K3, [(), ("v1",), ("v2",), ("v3",), ("v1", "v2"), ("v2", "v3")])
    check = validate_cover(U)
    assert not check and check.reason == "missing edge" and check.witness == ("v1", "v3")
    with pytest.raises(GraphError):
        link_complex(U)


def test_not_closed():
    U = explicit_cover(complete(2), [(), ("v1",), ("v1", "v2")])
    assert validate_cover(U).reason == "not closed under subsets"


def test_hollow_triangle():
    check = is_flag(link_complex(hollow_cover(complete(3))))
    assert not check and check.witness == ("v1", "v2", "v3")


def test_cliques_plus_omega_on_w6():
    W6 = wheel(6)
    omega = {"v1", "h", "v4"}
    base, plus = link_complex(cliques_cover(W6)), link_complex(cliques_plus_cover(W6, omega))
    assert plus.edges - base.edges == {("v1", "v4")}
    assert plus.spans_simplex(omega) and not base.spans_simplex(omega)
    assert is_flag(plus)


def test_non_2convex_omega_can_break_flagness():
    # v1, v3 at distance 2 with v2 outside omega: the triangle v1 v2 v3 is hollow
    W6 = wheel(6)
    assert not is_flag(link_complex(cliques_plus_cover(W6, {"v1", "v3"})))


@settings(max_examples=200, deadline=None)
@given(graphs(max_vertices=7))
def test_clique_complex_is_flag(G):
    assert is_flag(link_complex(cliques_cover(G)))


@settings(max_examples=200, deadline=None)
@given(graphs(max_vertices=7))
def test_maximal_cliques_match_networkx(G):
    ours = sorted(sorted(c) for c in maximal_cliques(G.vertices, G.neighbors))
    theirs = sorted(sorted(c) for c in nx.find_cliques(oracles.finite_graph(G)))
    assert ours == theirs


@settings(max_examples=300, deadline=None)
@given(graphs(max_vertices=7), st.integers(0, 2**32 - 1))
def test_flag_matches_enumeration(G, seed):
    rng = random.Random(seed)
    gens = [rng.sample(G.vertices, rng.randint(1, len(G))) for _ in range(rng.randint(0, 4))]
    U = generated_cover(G, gens)
    members = oracles.downward_closure(gens + [[u, v] for u, v, _ in G.edges] + [[v] for v in G.vertices])
    assert U.members == members
    expected = oracles.flag_by_enumeration(G.vertices, members.__contains__)
    got = is_flag(link_complex(U))
    assert bool(got) == expected
    if not got:
        W = fs(got.witness)
        assert len(W) >= 3 and W not in members
        assert all(fs(p) in members for p in combinations(W, 2))
