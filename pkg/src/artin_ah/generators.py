"""Named graph families: paths, cycles, complete graphs, wheels, random graphs and
the finite/affine Coxeter catalog.

Vertices are named ``v1 .. vn``; a wheel's apex is ``h``.  Catalog graphs are
presentation graphs: pairs that are not joined in the Coxeter diagram get the
label 2, and only ``~A1`` has an infinity pair.
"""

from __future__ import annotations

import random as _random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence, Union

from .coxeter import CoxeterType, parse_type_name
from .graph import INF, GraphError, PresentationGraph

Label = Union[int, float]
LabelRule = Union[Label, Sequence[Label], None]


@dataclass(frozen=True)
class NamedFamily:
    """``family`` is one of path, cycle, complete, wheel, random or ``catalog:<type>``.

    ``labels`` is one label for every edge or a sequence in edge order (paths:
    v1v2, v2v3, ...; cycles additionally vnv1; complete graphs: pairs in
    lexicographic order).  Wheels take ``rim`` and ``spoke`` labels instead.
    Random graphs draw each pair's label from ``choices`` using ``seed``.
    """

    family: str
    n: int = 0
    labels: LabelRule = 3
    rim: LabelRule = 3
    spoke: LabelRule = 3
    choices: tuple[Label, ...] = (2, 3, INF)
    seed: int | None = None


def _names(n: int) -> list[str]:
    return [f"v{i}" for i in range(1, n + 1)]


def _spread(rule: LabelRule, count: int, what: str) -> list[Label]:
    if isinstance(rule, (int, float)):
        return [rule] * count
    if rule is None:
        raise GraphError(f"{what}: labels required")
    rule = list(rule)
    if len(rule) != count:
        raise GraphError(f"{what}: expected {count} labels, got {len(rule)}")
    return rule


def path(n: int, labels: LabelRule = 3) -> PresentationGraph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    V = _names(n)
    pairs = list(zip(V, V[1:]))
    return PresentationGraph(V, dict(zip(pairs, _spread(labels, len(pairs), "path"))))


def cycle(n: int, labels: LabelRule = 3) -> PresentationGraph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    V = _names(n)
    pairs = list(zip(V, V[1:] + V[:1]))
    return PresentationGraph(V, dict(zip(pairs, _spread(labels, n, "cycle"))))


def complete(n: int, labels: LabelRule = 3) -> PresentationGraph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    V = _names(n)
    pairs = list(combinations(V, 2))
    return PresentationGraph(V, dict(zip(pairs, _spread(labels, len(pairs), "complete"))))


def wheel(n: int, rim: LabelRule = 3, spoke: LabelRule = 3) -> PresentationGraph:
    if n < 3:
        raise GraphError("wheel needs n >= 3 rim vertices")
    V = _names(n)
    rim_pairs = list(zip(V, V[1:] + V[:1]))
    labels = dict(zip(rim_pairs, _spread(rim, n, "wheel rim")))
    labels.update({("h", v): m for v, m in zip(V, _spread(spoke, n, "wheel spokes"))})
    return PresentationGraph(["h", *V], labels)


def random_graph(n: int, choices: Sequence[Label] = (2, 3, INF), seed: int | None = None) -> PresentationGraph:
    if seed is None:
        raise GraphError("random graphs need an explicit seed")
    if n < 1 or not choices:
        raise GraphError("random graph needs n >= 1 and at least one label choice")
    rng = _random.Random(seed)
    V = _names(n)
    return PresentationGraph(V, {p: rng.choice(list(choices)) for p in combinations(V, 2)})


def _diagram(n: int, edges: dict[tuple[int, int], Label]) -> PresentationGraph:
    """Presentation graph of a Coxeter diagram on v1..vn (1-based indices)."""
    V = _names(n)
    labels: dict[tuple[str, str], Label] = {p: 2 for p in combinations(V, 2)}
    for (i, j), m in edges.items():
        labels[(V[i - 1], V[j - 1])] = m
    return PresentationGraph(V, labels)


def _chain(n: int, heavy: dict[int, int] | None = None) -> dict[tuple[int, int], Label]:
    """Path v1 - ... - vn with label 3, except edge k (v_k v_{k+1}) labeled heavy[k]."""
    heavy = heavy or {}
    return {(i, i + 1): heavy.get(i, 3) for i in range(1, n)}


def catalog(name: str | CoxeterType) -> PresentationGraph:
    t = parse_type_name(name) if isinstance(name, str) else name
    f, n = t.family, t.rank
    if f == "A":
        return _diagram(n, _chain(n))
    if f == "B":
        return _diagram(n, _chain(n, {n - 1: 4}))
    if f == "D":
        return _diagram(n, {**_chain(n - 1), (n - 2, n): 3})
    if f == "E":
        return _diagram(n, {**_chain(n - 1), (3, n): 3})
    if f == "F":
        return _diagram(4, _chain(4, {2: 4}))
    if f == "H":
        return _diagram(n, _chain(n, {1: 5}))
    if f == "I2":
        return _diagram(2, {(1, 2): t.m})
    if f == "~A":
        if n == 2:
            return PresentationGraph(_names(2))
        return _diagram(n, {**_chain(n), (1, n): 3})
    if f == "~B":
        return _diagram(n, {**_chain(n - 1, {n - 2: 4}), (2, n): 3})
    if f == "~C":
        return _diagram(n, _chain(n, {1: 4, n - 1: 4}))
    if f == "~D":
        return _diagram(n, {**_chain(n - 2), (2, n - 1): 3, (n - 3, n): 3})
    if f == "~E":
        arms = {7: (2, 2, 2), 8: (1, 3, 3), 9: (1, 2, 5)}[n]
        edges: dict[tuple[int, int], Label] = {}
        nxt = 2
        for length in arms:
            prev = 1
            for _ in range(length):
                edges[(prev, nxt)] = 3
                prev, nxt = nxt, nxt + 1
        return _diagram(n, edges)
    if f == "~F":
        return _diagram(5, _chain(5, {3: 4}))
    if f == "~G":
        return _diagram(3, _chain(3, {1: 6}))
    raise GraphError(f"no catalog graph for {t.name}")


def catalog_names() -> list[str]:
    """The catalog exercised by the acceptance suite."""
    names = [f"A{n}" for n in range(1, 9)] + [f"B{n}" for n in range(2, 9)]
    names += [f"D{n}" for n in range(4, 9)] + ["E6", "E7", "E8", "F4", "H3", "H4"]
    names += [f"I2({m})" for m in range(3, 9)]
    names += [f"~A{n}" for n in range(2, 7)] + [f"~C{n}" for n in range(2, 7)]
    return names


def affine_extras() -> list[str]:
    return ["~A1", *(f"~B{n}" for n in range(3, 7)), *(f"~D{n}" for n in range(4, 8)),
            "~E6", "~E7", "~E8", "~F4", "~G2"]


def generate(family: NamedFamily) -> PresentationGraph:
    kind = family.family
    if kind.startswith("catalog:"):
        return catalog(kind.split(":", 1)[1])
    if kind == "path":
        return path(family.n, family.labels)
    if kind == "cycle":
        return cycle(family.n, family.labels)
    if kind == "complete":
        return complete(family.n, family.labels)
    if kind == "wheel":
        return wheel(family.n, family.rim, family.spoke)
    if kind == "random":
        return random_graph(family.n, family.choices, family.seed)
    raise GraphError(f"unknown family {kind!r}")


def product(*graphs: PresentationGraph) -> PresentationGraph:
    """Disjoint union joined by label-2 edges (a direct product of Artin groups).

    Vertex names must be disjoint across the factors.
    """
    verts: list[str] = []
    labels: dict[tuple[str, str], Label] = {}
    for G in graphs:
        verts += G.vertices
        labels.update(G.labels)
    for G, H in combinations(graphs, 2):
        for u in G.vertices:
            for v in H.vertices:
                labels[(u, v)] = 2
    return PresentationGraph(verts, labels)


def rename(G: PresentationGraph, prefix: str) -> PresentationGraph:
    return PresentationGraph([prefix + v for v in G.vertices],
                             {(prefix + u, prefix + v): m for u, v, m in G.edges})
