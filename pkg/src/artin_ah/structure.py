"""Direct-factor decomposition, joins, visual splittings and 2-convexity."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal

from .graph import (
    GraphError,
    PresentationGraph,
    _components,
    components,
    distance2_pairs,
    dynkin_view,
    induced_subgraph,
    vertex_set,
)

log = logging.getLogger(__name__)

MAX_BIPARTITIONS = 2**12
ALL_MODE_MAX_VERTICES = 14

Mode = Literal["pairs", "min-sep", "all"]


def _key(S: Iterable[str]) -> tuple:
    S = tuple(sorted(S))
    return (len(S), S)


def irreducible_factors(G: PresentationGraph) -> list[frozenset[str]]:
    """Vertex sets of the irreducible direct factors (Dynkin components)."""
    if not len(G):
        raise GraphError("the empty graph has no factor decomposition")
    return dynkin_view(G).components()


def is_irreducible(G: PresentationGraph) -> bool:
    return len(irreducible_factors(G)) == 1


def normal_standard_parabolics(G: PresentationGraph) -> list[frozenset[str]]:
    """Every union of factor vertex sets, the empty set and ``V`` included."""
    factors = irreducible_factors(G) if len(G) else []
    out = []
    for k in range(len(factors) + 1):
        for combo in combinations(factors, k):
            out.append(frozenset().union(*combo))
    return sorted(out, key=_key)


def contains_direct_factor(G: PresentationGraph, S: Iterable[str]) -> bool:
    S = vertex_set(G, S)
    return any(F <= S for F in irreducible_factors(G))


def factors_inside(G: PresentationGraph, S: Iterable[str]) -> list[frozenset[str]]:
    S = vertex_set(G, S)
    return [F for F in irreducible_factors(G) if F <= S]


def is_join(G: PresentationGraph) -> tuple[frozenset[str], frozenset[str]] | None:
    """A partition ``(V1, V2)`` with every cross pair labeled finitely, if one exists.

    Such a partition exists iff the graph of infinity-labeled pairs is disconnected;
    ``V1`` is its first component in (size, lexicographic) order.
    """
    if len(G) < 2:
        raise GraphError("is_join needs at least two vertices")
    verts = G.vertex_set
    non_adj = {v: verts - G.neighbors(v) - {v} for v in verts}
    comps = _components(verts, non_adj)
    if len(comps) == 1:
        return None
    first = min(comps, key=_key)
    return tuple(sorted((first, verts - first), key=_key))


@dataclass(frozen=True)
class Splitting:
    """A visual splitting with vertex sets ``gamma1``, ``gamma2`` and ``omega = gamma1 & gamma2``."""

    gamma1: frozenset[str]
    gamma2: frozenset[str]
    omega: frozenset[str]

    def validate(self, G: PresentationGraph) -> None:
        V = G.vertex_set
        if self.gamma1 | self.gamma2 != V:
            raise GraphError("gamma1 and gamma2 do not cover the graph")
        if self.gamma1 & self.gamma2 != self.omega:
            raise GraphError("omega is not gamma1 & gamma2")
        if self.omega in (self.gamma1, self.gamma2):
            raise GraphError("trivial splitting: omega equals a vertex subgraph")
        for u in self.gamma1 - self.omega:
            for v in self.gamma2 - self.omega:
                if G.adjacent(u, v):
                    raise GraphError(f"edge {u}-{v} crosses the splitting outside omega")

    def is_valid(self, G: PresentationGraph) -> bool:
        try:
            self.validate(G)
        except GraphError:
            return False
        return True

    def sort_key(self) -> tuple:
        return (_key(self.omega), _key(self.gamma1), _key(self.gamma2))

    def to_dict(self) -> dict:
        return {
            "gamma1": sorted(self.gamma1),
            "gamma2": sorted(self.gamma2),
            "omega": sorted(self.omega),
        }


class SplittingList(list):
    """A list of splittings with any truncation notes from the enumeration."""

    def __init__(self, items=(), notes=()):
        super().__init__(items)
        self.notes = list(notes)


def minimal_separators(G: PresentationGraph) -> list[frozenset[str]]:
    """All minimal vertex separators of the adjacency graph.

    Close-separator generation: start from the neighbourhoods of the components
    of ``G - N[v]`` and close under ``S -> N(C)`` for the components ``C`` of
    ``G - (S | N(x))``, ``x`` in ``S``.  A disconnected graph has the empty
    separator.
    """
    verts = G.vertex_set

    def neighbourhood(C: frozenset[str]) -> frozenset[str]:
        return frozenset().union(*(G.neighbors(c) for c in C)) - C

    found: set[frozenset[str]] = set()
    todo: list[frozenset[str]] = []

    def add_from(removed: frozenset[str]) -> None:
        for C in components(G, verts - removed):
            S = neighbourhood(C)
            if S not in found:
                found.add(S)
                todo.append(S)

    for v in sorted(verts):
        add_from(G.neighbors(v) | {v})
    while todo:
        S = todo.pop()
        for x in sorted(S):
            add_from(S | G.neighbors(x))
    # N(C) for a component C is always a minimal separator unless C is the only full component
    out = [S for S in found if _full_components(G, S) >= 2]
    return sorted(out, key=_key)


def _full_components(G: PresentationGraph, S: frozenset[str]) -> int:
    return sum(
        1
        for C in components(G, G.vertex_set - S)
        if all(any(G.adjacent(s, c) for c in C) for s in S)
    )


def _bipartitions(parts: list[frozenset[str]]) -> tuple[list[tuple[frozenset, frozenset]], bool]:
    """Unordered two-block groupings of ``parts``; one-vs-rest only past the cap."""
    k = len(parts)
    total = 2 ** (k - 1) - 1
    if total > MAX_BIPARTITIONS:
        everything = frozenset().union(*parts)
        return [(p, everything - p) for p in parts], True
    first, rest = parts[0], parts[1:]
    out = []
    for mask in range(1, 2 ** (k - 1)):
        side1 = set(first)
        side2: set[str] = set()
        for i, p in enumerate(rest):
            (side2 if (mask >> i) & 1 else side1).update(p)
        out.append((frozenset(side1), frozenset(side2)))
    return out, False


def _splittings_over(G: PresentationGraph, omega: frozenset[str], notes: list[str]) -> list[Splitting]:
    comps = components(G, G.vertex_set - omega)
    if len(comps) < 2:
        return []
    blocks, truncated = _bipartitions(comps)
    if truncated:
        note = (f"omega={sorted(omega)}: {len(comps)} components, "
                f"only one-vs-rest bipartitions enumerated")
        log.info(note)
        notes.append(note)
    return [Splitting(omega | a, omega | b, omega) for a, b in blocks]


def enumerate_visual_splittings(G: PresentationGraph, mode: Mode = "min-sep") -> SplittingList:
    """Visual splittings of ``G``, ordered by ``|omega|`` then lexicographically."""
    notes: list[str] = []
    result: list[Splitting] = []
    V = G.vertex_set
    if mode == "pairs":
        for s, t in combinations(G.vertices, 2):
            if not G.adjacent(s, t):
                result.append(Splitting(V - {t}, V - {s}, V - {s, t}))
    elif mode == "min-sep":
        for omega in minimal_separators(G):
            result.extend(_splittings_over(G, omega, notes))
    elif mode == "all":
        if len(G) > ALL_MODE_MAX_VERTICES:
            raise GraphError(
                f"mode 'all' is capped at {ALL_MODE_MAX_VERTICES} vertices, graph has {len(G)}"
            )
        for k in range(len(G) - 1):
            for omega in combinations(G.vertices, k):
                result.extend(_splittings_over(G, frozenset(omega), notes))
    else:
        raise ValueError(f"unknown splitting mode {mode!r}")
    unique = {sp.sort_key(): sp for sp in result}
    return SplittingList([unique[k] for k in sorted(unique)], notes)


def is_2convex(G: PresentationGraph, S: Iterable[str]) -> bool:
    S = vertex_set(G, S)
    return all(common <= S for common in distance2_pairs(G, S).values())


def vertex_subgraphs(G: PresentationGraph, sp: Splitting) -> tuple[PresentationGraph, PresentationGraph, PresentationGraph]:
    return induced_subgraph(G, sp.gamma1), induced_subgraph(G, sp.gamma2), induced_subgraph(G, sp.omega)
