"""Hypothesis strategies and a compact graph builder shared by the tests."""

from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from artin_ah import INF, PresentationGraph


@st.composite
def graphs(draw, min_vertices=1, max_vertices=6, labels=(2, 3, 4, 5, 6, INF)):
    n = draw(st.integers(min_vertices, max_vertices))
    V = [f"v{i}" for i in range(1, n + 1)]
    pairs = list(combinations(V, 2))
    labs = draw(st.lists(st.sampled_from(labels), min_size=len(pairs), max_size=len(pairs)))
    return PresentationGraph(V, dict(zip(pairs, labs)))


@st.composite
def graph_and_subset(draw, **kw):
    G = draw(graphs(**kw))
    S = draw(st.sets(st.sampled_from(G.vertices)))
    return G, frozenset(S)


def mk(vertices: str, *edges: tuple[str, str, int]) -> PresentationGraph:
    """Compact fixture builder: mk("a b c", ("a", "b", 3))."""
    return PresentationGraph(vertices.split(), {(u, v): m for u, v, m in edges})
