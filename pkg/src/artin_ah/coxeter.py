"""Finite and affine Coxeter type recognition, and the class profile of a graph.

Recognition is exact: each connected component of the Coxeter diagram is
matched structurally against the finite and affine catalogs.  The cosine
matrix signature is kept as an independent numeric check.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .cliques import maximal_cliques
from .graph import INF, PresentationGraph, dynkin_view, induced_subgraph, is_clique

FINITE_FAMILIES = ("A", "B", "D", "E", "F", "H", "I2")
AFFINE_FAMILIES = ("~A", "~B", "~C", "~D", "~E", "~F", "~G")


@dataclass(frozen=True, order=True)
class CoxeterType:
    """A Coxeter type name.

    ``family`` is one of ``A B D E F H I2`` (finite), the same letters prefixed
    by ``~`` (affine), or ``Infinite``.  ``rank`` is the number of generators;
    for affine types the conventional index is ``rank - 1`` (``~A2`` has three
    generators).  ``m`` is only set for ``I2(m)``.
    """

    family: str
    rank: int
    m: int | None = None

    def __post_init__(self):
        f, n = self.family, self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "H": n in (3, 4),
            "I2": n == 2 and self.m is not None and self.m >= 3,
            "~A": n >= 2,
            "~B": n >= 4,
            "~C": n >= 3,
            "~D": n >= 5,
            "~E": n in (7, 8, 9),
            "~F": n == 5,
            "~G": n == 3,
            "Infinite": n >= 1,
        }.get(f)
        if not ok:
            raise ValueError(f"inconsistent Coxeter type {f} rank {n} m={self.m}")
        if f != "I2" and self.m is not None:
            raise ValueError("only I2 carries a label")

    @property
    def finite(self) -> bool:
        return self.family in FINITE_FAMILIES

    @property
    def affine(self) -> bool:
        return self.family in AFFINE_FAMILIES

    @property
    def name(self) -> str:
        if self.family == "I2":
            return f"I2({self.m})"
        if self.family == "Infinite":
            return "Infinite"
        if self.affine:
            return f"{self.family}{self.rank - 1}"
        return f"{self.family}{self.rank}"

    def __str__(self):
        return self.name

    def canonical(self) -> CoxeterType:
        """Collapse the rank-2 aliases I2(3) = A2 and I2(4) = B2."""
        if self.family == "I2" and self.m == 3:
            return CoxeterType("A", 2)
        if self.family == "I2" and self.m == 4:
            return CoxeterType("B", 2)
        return self


def parse_type_name(name: str) -> CoxeterType:
    """Inverse of ``CoxeterType.name``; also accepts ``G2`` for ``I2(6)``."""
    s = name.strip()
    if s == "Infinite":
        raise ValueError("'Infinite' has no fixed rank")
    if s.startswith("I2(") and s.endswith(")"):
        return CoxeterType("I2", 2, int(s[3:-1]))
    if s == "G2":
        return CoxeterType("I2", 2, 6)
    affine = s.startswith("~")
    body = s[1:] if affine else s
    letter, digits = body[0], body[1:]
    if not digits.isdigit():
        raise ValueError(f"bad type name {name!r}")
    n = int(digits)
    if affine:
        return CoxeterType("~" + letter, n + 1)
    return CoxeterType(letter, n)


# -- structural recognition ----------------------------------------------------


def _classify_component(G: PresentationGraph, comp: frozenset[str]) -> CoxeterType:
    n = len(comp)
    verts = sorted(comp)
    if n == 1:
        return CoxeterType("A", 1)
    if any(G.label(u, v) == INF for u, v in combinations(verts, 2)):
        # the infinite dihedral group is the affine type ~A1
        if n == 2:
            return CoxeterType("~A", 2)
        return CoxeterType("Infinite", n)
    # Coxeter diagram: edges where 3 <= m < inf
    adj = {v: {w: int(G.label(v, w)) for w in verts if w != v and G.label(v, w) >= 3} for v in verts}
    n_edges = sum(len(a) for a in adj.values()) // 2
    labels = [G.label(u, v) for u, v in combinations(verts, 2) if G.label(u, v) >= 3]
    deg = {v: len(adj[v]) for v in verts}

    if n == 2:
        m = labels[0]
        if m == 3:
            return CoxeterType("A", 2)
        if m == 4:
            return CoxeterType("B", 2)
        return CoxeterType("I2", 2, m)

    if n_edges == n:
        if all(d == 2 for d in deg.values()) and all(m == 3 for m in labels):
            return CoxeterType("~A", n)
        return CoxeterType("Infinite", n)
    if n_edges != n - 1:
        return CoxeterType("Infinite", n)

    # the diagram is a tree from here on
    heavy = [m for m in labels if m != 3]
    branch = [v for v in verts if deg[v] >= 3]
    if max(deg.values()) >= 5:
        return CoxeterType("Infinite", n)
    if max(deg.values()) == 4:
        if n == 5 and not heavy:
            return CoxeterType("~D", 5)
        return CoxeterType("Infinite", n)

    if not branch:
        path = _path_order(adj, verts)
        seq = [adj[a][b] for a, b in zip(path, path[1:])]
        return _classify_path(seq)

    if len(branch) == 1:
        arms = _arms(adj, branch[0])
        lengths = sorted(len(a) for a in arms)
        if not heavy:
            if lengths[:2] == [1, 1]:
                return CoxeterType("D", lengths[2] + 3)
            return {
                (1, 2, 2): CoxeterType("E", 6),
                (1, 2, 3): CoxeterType("E", 7),
                (1, 2, 4): CoxeterType("E", 8),
                (2, 2, 2): CoxeterType("~E", 7),
                (1, 3, 3): CoxeterType("~E", 8),
                (1, 2, 5): CoxeterType("~E", 9),
            }.get(tuple(lengths), CoxeterType("Infinite", n))
        # ~B: a fork of two leaves, the heavy label 4 closing the third arm
        if heavy == [4] and lengths[:2] == [1, 1]:
            for arm in arms:
                if len(arm) != lengths[2]:
                    continue
                tail = arm[-2] if len(arm) > 1 else branch[0]
                if adj[tail][arm[-1]] == 4:
                    return CoxeterType("~B", n)
        return CoxeterType("Infinite", n)

    if len(branch) == 2 and not heavy:
        # ~D: a path whose two ends each fork into two leaves
        leaves_ok = all(sum(1 for w in adj[b] if deg[w] == 1) == 2 for b in branch)
        if leaves_ok:
            return CoxeterType("~D", n)
    return CoxeterType("Infinite", n)


def _path_order(adj: dict[str, dict[str, int]], verts: list[str]) -> list[str]:
    start = min(v for v in verts if len(adj[v]) == 1)
    path = [start]
    prev = None
    while True:
        nxt = [w for w in adj[path[-1]] if w != prev]
        if not nxt:
            return path
        prev = path[-1]
        path.append(nxt[0])


def _arms(adj: dict[str, dict[str, int]], center: str) -> list[list[str]]:
    arms = []
    for first in sorted(adj[center]):
        arm = [first]
        prev = center
        while len(adj[arm[-1]]) == 2:
            nxt = next(w for w in adj[arm[-1]] if w != prev)
            prev = arm[-1]
            arm.append(nxt)
        if len(adj[arm[-1]]) != 1:
            return []  # a second branch point inside this arm
        arms.append(arm)
    return arms


def _classify_path(seq: list[int]) -> CoxeterType:
    n = len(seq) + 1
    heavy = [(i, m) for i, m in enumerate(seq) if m != 3]
    ends = (0, len(seq) - 1)
    if not heavy:
        return CoxeterType("A", n)
    if len(heavy) == 1:
        i, m = heavy[0]
        if m == 4:
            if i in ends:
                return CoxeterType("B", n)
            if n == 4:
                return CoxeterType("F", 4)
            if n == 5 and i in (1, 2):
                return CoxeterType("~F", 5)
        elif m == 5 and i in ends and n in (3, 4):
            return CoxeterType("H", n)
        elif m == 6 and n == 3:
            return CoxeterType("~G", 3)
    elif len(heavy) == 2 and [m for _, m in heavy] == [4, 4] and {i for i, _ in heavy} == set(ends):
        return CoxeterType("~C", n)
    return CoxeterType("Infinite", n)


def spherical_decomposition(G: PresentationGraph) -> list[tuple[frozenset[str], CoxeterType]]:
    """Dynkin components of ``G`` with their Coxeter types, ordered by least vertex."""
    return [(comp, _classify_component(G, comp)) for comp in dynkin_view(G).components()]


def is_spherical(G: PresentationGraph) -> bool:
    return all(t.finite for _, t in spherical_decomposition(G))


def coxeter_type(G: PresentationGraph) -> CoxeterType | None:
    """Type of an irreducible graph; ``None`` when ``G`` has several Dynkin components."""
    dec = spherical_decomposition(G)
    return dec[0][1] if len(dec) == 1 else None


# -- numeric oracle --------------------------------------------------------------


class Signature(enum.Enum):
    POSITIVE_DEFINITE = "PositiveDefinite"
    POSITIVE_SEMIDEFINITE_RANK1_KERNEL = "PositiveSemidefiniteRank1Kernel"
    POSITIVE_SEMIDEFINITE_LARGER_KERNEL = "PositiveSemidefiniteLargerKernel"
    INDEFINITE = "Indefinite"


def cosine_matrix(G: PresentationGraph) -> np.ndarray:
    n = len(G)
    B = np.eye(n)
    for i, j in combinations(range(n), 2):
        m = G.label(G.vertices[i], G.vertices[j])
        B[i, j] = B[j, i] = -1.0 if m == INF else -np.cos(np.pi / m)
    return B


def cosine_signature(G: PresentationGraph, tol: float = 1e-9) -> Signature:
    if tol <= 0:
        raise ValueError("tol must be positive")
    if len(G) == 0:
        return Signature.POSITIVE_DEFINITE
    eig = np.linalg.eigvalsh(cosine_matrix(G))
    if eig.min() < -tol:
        return Signature.INDEFINITE
    kernel = int(np.sum(np.abs(eig) <= tol))
    if kernel == 0:
        return Signature.POSITIVE_DEFINITE
    if kernel == 1:
        return Signature.POSITIVE_SEMIDEFINITE_RANK1_KERNEL
    return Signature.POSITIVE_SEMIDEFINITE_LARGER_KERNEL


# -- class profile -------------------------------------------------------------------


@dataclass(frozen=True)
class ClassProfile:
    spherical: bool
    affine: bool
    fc: bool
    even: bool
    two_dimensional: bool
    large: bool
    xl: bool
    xxl: bool
    raag: bool
    free: bool
    two_two_free_2dim: bool
    dimension: int
    types: tuple[str, ...]

    def flags(self) -> list[str]:
        names = ("spherical", "affine", "fc", "even", "two_dimensional", "large", "xl", "xxl",
                 "raag", "free", "two_two_free_2dim")
        return [n for n in names if getattr(self, n)]


def is_two_dimensional(G: PresentationGraph) -> bool:
    if not G.edges:
        return False
    for a, b, c in combinations(G.vertices, 3):
        mab, mbc, mac = G.label(a, b), G.label(b, c), G.label(a, c)
        if INF in (mab, mbc, mac):
            continue
        if Fraction(1, mab) + Fraction(1, mbc) + Fraction(1, mac) > 1:
            return False
    return True


def has_consecutive_twos(G: PresentationGraph) -> bool:
    return any(
        sum(1 for w in G.neighbors(v) if G.label(v, w) == 2) >= 2 for v in G.vertices
    )


def spherical_cliques(G: PresentationGraph) -> list[frozenset[str]]:
    """Maximal spherical vertex sets; they are always cliques of ``G``."""
    found: set[frozenset[str]] = set()
    for clique in maximal_cliques(G.vertices, G.neighbors):
        if is_spherical(induced_subgraph(G, clique)):
            found.add(clique)
            continue
        # spherical subgraphs are closed under passing to subsets
        for k in range(len(clique) - 1, 0, -1):
            layer = [frozenset(s) for s in combinations(sorted(clique), k)
                     if is_spherical(induced_subgraph(G, s))]
            if layer:
                found.update(layer)
                break
    maximal = [s for s in found if not any(s < t for t in found)]
    return sorted(maximal, key=lambda s: (-len(s), sorted(s)))


def dimension(G: PresentationGraph) -> int:
    sph = spherical_cliques(G)
    return max((len(s) for s in sph), default=0)


def is_fc(G: PresentationGraph) -> bool:
    return all(is_spherical(induced_subgraph(G, c)) for c in maximal_cliques(G.vertices, G.neighbors))


def class_profile(G: PresentationGraph) -> ClassProfile:
    finite = [m for _, _, m in G.edges]
    dec = spherical_decomposition(G)
    spherical = all(t.finite for _, t in dec)
    two_dim = is_two_dimensional(G)
    return ClassProfile(
        spherical=spherical,
        affine=len(dec) == 1 and dec[0][1].affine,
        fc=spherical or is_fc(G),
        even=all(m % 2 == 0 for m in finite),
        two_dimensional=two_dim,
        large=all(m >= 3 for m in finite),
        xl=all(m >= 4 for m in finite),
        xxl=all(m >= 5 for m in finite),
        raag=all(m == 2 for m in finite),
        free=not finite,
        two_two_free_2dim=two_dim and not has_consecutive_twos(G),
        dimension=len(G) if spherical else dimension(G),
        types=tuple(t.name for _, t in dec),
    )


__all__ = [
    "CoxeterType", "Signature", "ClassProfile", "parse_type_name", "spherical_decomposition",
    "is_spherical", "coxeter_type", "cosine_matrix", "cosine_signature", "class_profile",
    "is_two_dimensional", "is_fc", "dimension", "spherical_cliques", "is_clique",
]
