"""Complete covers of a presentation graph and their link complexes.

A complete cover is a family of vertex sets that contains every edge of the
graph and is closed under taking subsets (the empty set included).  Its link
complex has the graph's vertices and one simplex per member.  The two
constructive kinds are kept as membership predicates; only explicit covers
are stored member by member.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Literal

from .cliques import maximal_cliques
from .graph import GraphError, PresentationGraph, is_clique, vertex_set

Kind = Literal["cliques", "cliques+omega", "explicit"]


@dataclass(frozen=True)
class CompleteCover:
    graph: PresentationGraph
    kind: Kind = "cliques"
    omega: frozenset[str] = frozenset()
    members: frozenset[frozenset[str]] = frozenset()

    def contains(self, T: Iterable[str]) -> bool:
        T = frozenset(T)
        if not T <= self.graph.vertex_set:
            return False
        if self.kind == "explicit":
            return T in self.members
        if self.kind == "cliques+omega" and T <= self.omega:
            return True
        return is_clique(self.graph, T)

    def to_dict(self) -> dict:
        doc: dict = {"kind": self.kind}
        if self.kind == "cliques+omega":
            doc["omega"] = sorted(self.omega)
        if self.kind == "explicit":
            doc["members"] = sorted((sorted(m) for m in self.members), key=lambda m: (len(m), m))
        return doc


def cliques_cover(G: PresentationGraph) -> CompleteCover:
    return CompleteCover(G, "cliques")


def cliques_plus_cover(G: PresentationGraph, omega: Iterable[str]) -> CompleteCover:
    return CompleteCover(G, "cliques+omega", omega=vertex_set(G, omega))


def explicit_cover(G: PresentationGraph, members: Iterable[Iterable[str]]) -> CompleteCover:
    """An explicit cover listing every member exactly as given."""
    fam = frozenset(vertex_set(G, m) for m in members)
    return CompleteCover(G, "explicit", members=fam)


def generated_cover(G: PresentationGraph, generators: Iterable[Iterable[str]]) -> CompleteCover:
    """Explicit cover made of all subsets of the generators and of every edge of ``G``."""
    gens = [sorted(vertex_set(G, g)) for g in generators]
    gens += [[u, v] for u, v, _ in G.edges]
    gens += [[v] for v in G.vertices]
    fam: set[frozenset[str]] = {frozenset()}
    for g in gens:
        for k in range(1, len(g) + 1):
            fam.update(frozenset(c) for c in combinations(g, k))
    return CompleteCover(G, "explicit", members=frozenset(fam))


def hollow_cover(G: PresentationGraph) -> CompleteCover:
    """The smallest complete cover: the empty set, vertices and edges."""
    return generated_cover(G, [])


@dataclass(frozen=True)
class CoverCheck:
    ok: bool
    reason: str = ""
    witness: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def validate_cover(U: CompleteCover) -> CoverCheck:
    G = U.graph
    for u, v, _ in G.edges:
        if not U.contains({u, v}):
            return CoverCheck(False, "missing edge", (u, v))
    if U.kind != "explicit":
        return CoverCheck(True)
    for v in G.vertices:
        if not U.contains({v}):
            return CoverCheck(False, "not closed under subsets", (v,))
    if frozenset() not in U.members:
        return CoverCheck(False, "not closed under subsets", ())
    for m in sorted(U.members, key=lambda m: (len(m), sorted(m))):
        for x in sorted(m):
            if m - {x} not in U.members:
                return CoverCheck(False, "not closed under subsets", tuple(sorted(m - {x})))
    return CoverCheck(True)


@dataclass(frozen=True)
class LinkComplex:
    """Simplicial complex on ``V(G)`` whose simplices are the cover's members."""

    cover: CompleteCover
    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]] = field(repr=False)

    def spans_simplex(self, T: Iterable[str]) -> bool:
        return self.cover.contains(T)

    def neighbors(self, v: str) -> frozenset[str]:
        return frozenset(b if a == v else a for a, b in self.edges if v in (a, b))


def link_complex(U: CompleteCover) -> LinkComplex:
    check = validate_cover(U)
    if not check:
        raise GraphError(f"invalid cover ({check.reason}): {list(check.witness)}")
    G = U.graph
    edges = frozenset((u, v) for u, v in combinations(G.vertices, 2) if U.contains({u, v}))
    return LinkComplex(U, G.vertices, edges)


@dataclass(frozen=True)
class FlagCheck:
    ok: bool
    witness: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def is_flag(L: LinkComplex) -> FlagCheck:
    """Every clique of the 1-skeleton spans a simplex.

    Downward closure means only maximal cliques need testing.  On failure the
    witness is a smallest pairwise-adjacent set that is not a simplex.
    """
    adj = {v: L.neighbors(v) for v in L.vertices}
    for clique in maximal_cliques(L.vertices, adj.__getitem__):
        if L.spans_simplex(clique):
            continue
        verts = sorted(clique)
        for k in range(3, len(verts) + 1):
            for sub in combinations(verts, k):
                if not L.spans_simplex(sub):
                    return FlagCheck(False, sub)
    return FlagCheck(True)
