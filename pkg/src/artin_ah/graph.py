"""Labeled presentation graphs and the elementary queries built on them.

A presentation graph has one vertex per Artin generator and an edge labeled
``m >= 2`` for every braid relation of length ``m``.  A pair of vertices with
no edge carries the label infinity (no relation).  Graph values are immutable
and hashable; vertex order is always lexicographic so every enumeration
downstream is deterministic.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

INF = math.inf

VertexSet = frozenset  # subsets of a graph's vertices; validated by `vertex_set`


class GraphError(ValueError):
    """Invalid graph data (bad label, unknown vertex, self pair...)."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _pair(u: str, v: str) -> tuple[str, str]:
    return (u, v) if u < v else (v, u)


class PresentationGraph:
    """Immutable labeled graph; absent pairs carry the label ``INF``."""

    __slots__ = ("vertices", "_labels", "_table", "_adj")

    def __init__(self, vertices: Iterable[str], labels: Mapping[tuple[str, str], float] | Iterable = ()):
        verts = list(vertices)
        for v in verts:
            if not isinstance(v, str) or not v or any(c.isspace() for c in v):
                raise GraphError(f"invalid vertex name {v!r}")
        if len(set(verts)) != len(verts):
            dup = next(v for v in verts if verts.count(v) > 1)
            raise GraphError(f"duplicate vertex {dup!r}")
        vset = set(verts)
        items = labels.items() if isinstance(labels, Mapping) else labels
        table: dict[tuple[str, str], int] = {}
        for item in items:
            (u, v), m = item
            if u == v:
                raise GraphError(f"self pair {u!r}")
            if u not in vset or v not in vset:
                raise GraphError(f"edge {u}-{v} references an unknown vertex")
            if m == INF:
                continue
            if isinstance(m, bool) or int(m) != m or m < 2:
                raise GraphError(f"label of {u}-{v} must be an integer >= 2 or inf, got {m!r}")
            key = _pair(u, v)
            if key in table and table[key] != int(m):
                raise GraphError(f"conflicting labels for {u}-{v}")
            table[key] = int(m)
        object.__setattr__(self, "vertices", tuple(sorted(verts)))
        object.__setattr__(self, "_labels", tuple(sorted(table.items())))
        object.__setattr__(self, "_table", table)
        adj: dict[str, set[str]] = {v: set() for v in verts}
        for u, v in table:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", {v: frozenset(n) for v, n in adj.items()})

    def __setattr__(self, name, value):
        raise AttributeError("PresentationGraph is immutable")

    def __eq__(self, other):
        if not isinstance(other, PresentationGraph):
            return NotImplemented
        return self.vertices == other.vertices and self._labels == other._labels

    def __hash__(self):
        return hash((self.vertices, self._labels))

    def __repr__(self):
        edges = ", ".join(f"{u}-{v}:{m}" for (u, v), m in self._labels)
        return f"PresentationGraph({list(self.vertices)}, {{{edges}}})"

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self._adj

    def label(self, u: str, v: str) -> float:
        """Label m_uv; ``INF`` when u and v are not joined by an edge."""
        if u == v:
            raise GraphError(f"no label for the self pair {u!r}")
        if u not in self._adj or v not in self._adj:
            raise GraphError(f"unknown vertex in pair {u}-{v}")
        return self._table.get(_pair(u, v), INF)

    def adjacent(self, u: str, v: str) -> bool:
        return v in self._adj[u]

    def neighbors(self, v: str) -> frozenset[str]:
        return self._adj[v]

    @property
    def edges(self) -> tuple[tuple[str, str, int], ...]:
        """Finite-label edges as sorted ``(u, v, m)`` triples with ``u < v``."""
        return tuple((u, v, m) for (u, v), m in self._labels)

    @property
    def labels(self) -> dict[tuple[str, str], int]:
        return dict(self._labels)

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)


def vertex_set(G: PresentationGraph, S: Iterable[str]) -> frozenset[str]:
    """Validate that ``S`` is a subset of ``V(G)`` and freeze it."""
    S = frozenset(S)
    missing = S - G.vertex_set
    if missing:
        raise GraphError(f"vertices not in graph: {sorted(missing)}")
    return S


def induced_subgraph(G: PresentationGraph, S: Iterable[str]) -> PresentationGraph:
    S = vertex_set(G, S)
    return PresentationGraph(S, {(u, v): m for u, v, m in G.edges if u in S and v in S})


@dataclass(frozen=True)
class DynkinView:
    """Unlabeled graph joining s and t exactly when m_st != 2 (infinity included)."""

    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]

    def adjacent(self, u: str, v: str) -> bool:
        return _pair(u, v) in self.edges

    def components(self) -> list[frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return _components(self.vertices, adj)


def dynkin_view(G: PresentationGraph) -> DynkinView:
    edges = frozenset((u, v) for u, v in combinations(G.vertices, 2) if G.label(u, v) != 2)
    return DynkinView(G.vertices, edges)


def _components(vertices: Iterable[str], adj: Mapping[str, Iterable[str]]) -> list[frozenset[str]]:
    """Connected components, each found by BFS, ordered by least vertex."""
    seen: set[str] = set()
    out = []
    for root in sorted(vertices):
        if root in seen:
            continue
        comp = {root}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        out.append(frozenset(comp))
    return out


def components(G: PresentationGraph, S: Iterable[str] | None = None) -> list[frozenset[str]]:
    """Connected components of the adjacency graph of ``G`` restricted to ``S``."""
    S = G.vertex_set if S is None else vertex_set(G, S)
    return _components(S, {v: G.neighbors(v) & S for v in S})


def distances_from(G: PresentationGraph, source: str) -> dict[str, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in G.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance2_pairs(G: PresentationGraph, S: Iterable[str]) -> dict[tuple[str, str], frozenset[str]]:
    """Pairs of ``S`` at distance exactly 2 in ``G``, with all their common neighbours."""
    S = sorted(vertex_set(G, S))
    out = {}
    for u, w in combinations(S, 2):
        if G.adjacent(u, w):
            continue
        common = G.neighbors(u) & G.neighbors(w)
        if common:
            out[(u, w)] = frozenset(common)
    return out


def is_clique(G: PresentationGraph, S: Iterable[str] | None = None) -> bool:
    S = G.vertices if S is None else sorted(vertex_set(G, S))
    return all(G.adjacent(u, v) for u, v in combinations(S, 2))


# -- serialization -----------------------------------------------------------


def _parse_label(token: str, line: int) -> float:
    if token.lower() in ("inf", "infinity", "oo"):
        return INF
    try:
        m = int(token)
    except ValueError:
        raise ParseError(f"label {token!r} is not an integer or 'inf'", line) from None
    if m < 2:
        raise ParseError(f"label {m} < 2", line)
    return m


def parse_graph(source: str) -> PresentationGraph:
    """Parse the ``.artin`` text format.

    ::

        # comment
        vertices: a b c
        edge a b 3
        edge b c inf
    """
    verts: list[str] | None = None
    labels: dict[tuple[str, str], float] = {}
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            if verts is not None:
                raise ParseError("second 'vertices:' line", lineno)
            verts = line[len("vertices:"):].split()
            seen = set()
            for v in verts:
                if v in seen:
                    raise ParseError(f"duplicate vertex {v!r}", lineno)
                seen.add(v)
            continue
        parts = line.split()
        if parts[0] != "edge" or len(parts) != 4:
            raise ParseError(f"malformed line {raw.strip()!r}", lineno)
        if verts is None:
            raise ParseError("'edge' before 'vertices:'", lineno)
        _, u, v, tok = parts
        if u == v:
            raise ParseError(f"self-edge on {u!r}", lineno)
        for x in (u, v):
            if x not in seen:
                raise ParseError(f"edge references unknown vertex {x!r}", lineno)
        key = _pair(u, v)
        if key in labels:
            raise ParseError(f"duplicate edge {u} {v}", lineno)
        labels[key] = _parse_label(tok, lineno)
    if verts is None:
        raise ParseError("missing 'vertices:' line")
    return PresentationGraph(verts, labels)


def serialize_graph(G: PresentationGraph) -> str:
    lines = ["vertices: " + " ".join(G.vertices)]
    lines += [f"edge {u} {v} {m}" for u, v, m in G.edges]
    return "\n".join(lines) + "\n"


def graph_to_dict(G: PresentationGraph) -> dict:
    return {"vertices": list(G.vertices), "edges": [[u, v, m] for u, v, m in G.edges]}


def graph_from_dict(doc: Mapping) -> PresentationGraph:
    if not isinstance(doc, Mapping) or "vertices" not in doc:
        raise ParseError("structured graph needs a 'vertices' list")
    verts = doc["vertices"]
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        raise ParseError("'vertices' must be a list of strings")
    labels: dict[tuple[str, str], float] = {}
    for i, entry in enumerate(doc.get("edges", [])):
        if not (isinstance(entry, list) and len(entry) == 3):
            raise ParseError(f"edge #{i} must be [u, v, m]")
        u, v, m = entry
        if isinstance(m, str):
            if m.lower() != "inf":
                raise ParseError(f"edge #{i}: label {m!r} is not an integer or 'inf'")
            m = INF
        elif isinstance(m, bool) or not isinstance(m, int):
            raise ParseError(f"edge #{i}: label {m!r} is not an integer or 'inf'")
        if u == v:
            raise ParseError(f"edge #{i}: self-edge on {u!r}")
        key = _pair(u, v)
        if key in labels:
            raise ParseError(f"edge #{i}: duplicate edge {u} {v}")
        labels[key] = m
    try:
        return PresentationGraph(verts, labels)
    except ParseError:
        raise
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def parse_json_graph(source: str) -> PresentationGraph:
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    return graph_from_dict(doc)


def serialize_json_graph(G: PresentationGraph) -> str:
    return json.dumps(graph_to_dict(G), indent=2) + "\n"
