"""Maximal clique enumeration (Bron-Kerbosch with Tomita pivoting)."""

from __future__ import annotations

from typing import Callable, Iterable


def maximal_cliques(
    vertices: Iterable[str], neighbors: Callable[[str], Iterable[str]]
) -> list[frozenset[str]]:
    """All maximal cliques, sorted lexicographically by their sorted vertex lists.

    An empty vertex set has the single maximal clique ``frozenset()``.
    """
    verts = frozenset(vertices)
    adj = {v: frozenset(neighbors(v)) & verts for v in verts}
    out: list[frozenset[str]] = []

    def expand(R: frozenset[str], P: set[str], X: set[str]) -> None:
        if not P and not X:
            out.append(R)
            return
        # pivot maximizing |P & N(u)| keeps the recursion tree small
        pivot = max(sorted(P | X), key=lambda u: len(P & adj[u]))
        for v in sorted(P - adj[pivot]):
            expand(R | {v}, P & adj[v], X & adj[v])
            P.remove(v)
            X.add(v)

    expand(frozenset(), set(verts), set())
    return sorted(out, key=sorted)
