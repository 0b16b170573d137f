"""Rule engine composing known results into certificates.

Every public ``certify_*`` function is a pure function of the graph and a
:class:`RuleConfig`.  Rules are tried in a fixed, recorded order; the first
one that fires produces the certificate.  Proof rules for acylindrical
hyperbolicity only run on irreducible, non-spherical graphs with at least two
vertices, so disabling or reordering rules can cost a verdict but never flip
one.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from .certificate import Certificate, Claim, Verdict
from .citations import cite
from .cliques import maximal_cliques
from .coxeter import class_profile, is_spherical, spherical_decomposition
from .graph import GraphError, PresentationGraph, induced_subgraph, is_clique, vertex_set
from .structure import (
    Splitting,
    contains_direct_factor,
    enumerate_visual_splittings,
    factors_inside,
    irreducible_factors,
    is_2convex,
    is_join,
)

log = logging.getLogger(__name__)

IC_RULES = ("IC1", "IC2", "IC3", "IC4", "IC5", "IC6", "IC7", "IC8")
EDGE_ROUTES = ("EC-d", "EC-b", "EC-c", "EC-a")
AH_REFUTATIONS = ("R0", "R1", "R2")
AH_PROOFS = ("P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8")
WM_RULES = ("W1", "W2", "W3", "W4", "W5")
ALL_RULES = IC_RULES + EDGE_ROUTES + AH_REFUTATIONS + AH_PROOFS + WM_RULES

DEFAULT_BUDGET = 10_000


@dataclass(frozen=True)
class RuleConfig:
    """Which rules may fire, the proof-rule order for AH, and the splitting budget."""

    disabled: frozenset[str] = frozenset()
    ah_proof_order: tuple[str, ...] = AH_PROOFS
    budget: int = DEFAULT_BUDGET
    modes: tuple[str, ...] = ("pairs", "min-sep")

    def __post_init__(self):
        unknown = set(self.disabled) - set(ALL_RULES)
        if unknown:
            raise ValueError(f"unknown rule names: {sorted(unknown)}")
        if sorted(self.ah_proof_order) != sorted(AH_PROOFS):
            raise ValueError("ah_proof_order must be a permutation of P1..P8")
        if self.budget < 1:
            raise ValueError("budget must be positive")

    def on(self, rule: str) -> bool:
        return rule not in self.disabled

    @classmethod
    def disabling(cls, *rules: str, **kw) -> RuleConfig:
        return cls(disabled=frozenset(rules), **kw)


DEFAULT = RuleConfig()


def _check(G: PresentationGraph, statement: str, rule: str, **witnesses) -> Certificate:
    """A computation node: a graph property this package verified directly."""
    return Certificate(Claim("Check", G, statement=statement), Verdict.PROVEN, rule,
                       witnesses=dict(witnesses))


def _sets(sets: Iterable[Iterable[str]]) -> list[list[str]]:
    return [sorted(s) for s in sets]


def _types(G: PresentationGraph) -> list[str]:
    return [t.name for _, t in spherical_decomposition(G)]


def _not_virtually_cyclic(G: PresentationGraph) -> Certificate:
    return _check(G, f"A_G has {len(G)} >= 2 generators, so it is not virtually cyclic",
                  "check:not-virtually-cyclic", generators=len(G))


# -- intersection property ------------------------------------------------------------


@lru_cache(maxsize=4096)
def knows_ic(G: PresentationGraph, config: RuleConfig = DEFAULT) -> Certificate | None:
    """A certificate that ``A_G`` satisfies IC, from the known classes and closure lemmas."""
    claim = Claim("IC", G)
    n = len(G)

    def done(rule, anchor, premises=(), **w):
        return Certificate(claim, Verdict.PROVEN, rule, cite(anchor), tuple(premises), w)

    if config.on("IC1") and n <= 3:
        return done("IC1", "ic:three-generators",
                    [_check(G, f"|V| = {n} <= 3", "check:size", vertices=n)])
    prof = class_profile(G)
    if config.on("IC2") and prof.spherical:
        return done("IC2", "ic:spherical",
                    [_check(G, "Coxeter group is finite", "check:spherical", types=_types(G))])
    if config.on("IC3") and prof.raag:
        return done("IC3", "ic:raag", [_check(G, "every finite label is 2", "check:raag")])
    if config.on("IC4") and prof.large:
        return done("IC4", "ic:large", [_check(G, "every finite label is >= 3", "check:large")])
    if config.on("IC5") and prof.two_two_free_2dim:
        return done("IC5", "ic:22-free-2dim", [_check(
            G, "two-dimensional with no two adjacent edges labeled 2", "check:22-free-2dim")])
    if config.on("IC6") and prof.affine:
        (_, t), = spherical_decomposition(G)
        if t.family in ("~A", "~C"):
            return done("IC6", "ic:affine-AC",
                        [_check(G, f"irreducible Euclidean type {t.name}", "check:affine",
                                types=[t.name])])
    if config.on("IC7") and prof.even and prof.fc:
        return done("IC7", "ic:even-fc",
                    [_check(G, "all labels even and every clique spherical", "check:even-fc")])
    if config.on("IC8") and n:
        factors = irreducible_factors(G)
        if len(factors) > 1:
            subs = [knows_ic(induced_subgraph(G, F), config) for F in factors]
            if all(subs):
                return done("IC8", "ic:reducible",
                            [_check(G, f"A_G is a product of {len(factors)} factors",
                                    "check:factors", factors=_sets(factors))] + subs,
                            factors=_sets(factors))
    return None


def certify_ic(G: PresentationGraph, config: RuleConfig = DEFAULT) -> tuple[Verdict, Certificate]:
    cert = knows_ic(G, config)
    if cert is None:
        tried = [r for r in IC_RULES if config.on(r)]
        cert = Certificate(Claim("IC", G), Verdict.UNKNOWN, "none",
                           notes=(f"attempted: {', '.join(tried)}",), witnesses={"attempted": tried})
    return cert.verdict, cert


# -- edge-group intersections ----------------------------------------------------------


@lru_cache(maxsize=65536)
def certify_edge_condition(G: PresentationGraph, sp: Splitting,
                           config: RuleConfig = DEFAULT) -> Certificate | None:
    """Certificate that any two conjugates of ``A_Omega`` intersect in a parabolic subgroup.

    Routes in order: trivial edge group, IC for both vertex groups, 2-convex
    ``Omega`` (flag Godelle-Paris link), IC for the whole group.
    """
    sp.validate(G)
    claim = Claim("EdgeIntersectionsParabolic", G, splitting=sp)
    w = {"splitting": sp.to_dict()}

    if config.on("EC-d") and not sp.omega:
        return Certificate(claim, Verdict.PROVEN, "EC-d", cite("ec:trivial"), (), w)
    if config.on("EC-b"):
        ic1 = knows_ic(induced_subgraph(G, sp.gamma1), config)
        ic2 = knows_ic(induced_subgraph(G, sp.gamma2), config) if ic1 else None
        if ic1 and ic2:
            return Certificate(claim, Verdict.PROVEN, "EC-b", cite("ec:vertex-groups"), (ic1, ic2), w)
    if config.on("EC-c") and is_2convex(G, sp.omega):
        ic_omega = knows_ic(induced_subgraph(G, sp.omega), config)
        if ic_omega:
            cliques = maximal_cliques(G.vertices, G.neighbors)
            ic_cliques = []
            for c in cliques:
                cert = knows_ic(induced_subgraph(G, c), config)
                if cert is None:
                    break
                ic_cliques.append(cert)
            else:
                convex = _check(G, "Omega is 2-convex", "check:2-convex", omega=sorted(sp.omega))
                flag = Certificate(
                    Claim("Check", G, statement="link complex of cliques + subsets of Omega is flag"),
                    Verdict.PROVEN, "lemma:2-convex-flag", cite("lemma:2-convex-flag"), (convex,),
                    {"omega": sorted(sp.omega)})
                cat0 = Certificate(
                    Claim("Check", G, statement="Godelle-Paris complex X_U is CAT(0)"),
                    Verdict.PROVEN, "gp:flag-criterion", cite("gp:flag-criterion"), (flag,))
                return Certificate(claim, Verdict.PROVEN, "EC-c", cite("ec:2-convex"),
                                   (cat0, ic_omega, *ic_cliques),
                                   {**w, "maximal_cliques": _sets(cliques)})
    if config.on("EC-a"):
        ic = knows_ic(G, config)
        if ic:
            return Certificate(claim, Verdict.PROVEN, "EC-a", cite("ec:ambient-ic"), (ic,), w)
    return None


# -- splitting search ----------------------------------------------------------------


@dataclass(frozen=True)
class _Search:
    splittings: tuple[Splitting, ...]
    exhausted: bool  # False when the budget cut the candidate list short
    notes: tuple[str, ...]


@lru_cache(maxsize=1024)
def _candidate_splittings(G: PresentationGraph, config: RuleConfig) -> _Search:
    seen: set[Splitting] = set()
    out: list[Splitting] = []
    notes: list[str] = []
    for mode in config.modes:
        found = enumerate_visual_splittings(G, mode)
        notes.extend(found.notes)
        for sp in found:
            if sp in seen:
                continue
            if len(out) >= config.budget:
                notes.append(f"splitting budget of {config.budget} exhausted")
                return _Search(tuple(out), False, tuple(notes))
            seen.add(sp)
            out.append(sp)
    return _Search(tuple(out), True, tuple(notes))


# -- acylindrical hyperbolicity -------------------------------------------------------


def _unknown(claim: Claim, tried: list[str], notes: Iterable[str] = ()) -> Certificate:
    return Certificate(claim, Verdict.UNKNOWN, "none",
                       notes=(f"attempted: {', '.join(tried) or 'nothing'}", *notes),
                       witnesses={"attempted": tried})


def _ah_R0(G, claim, config):
    if len(G) == 1:
        return Certificate(claim, Verdict.REFUTED, "R0", cite("ah:cyclic"),
                           (_check(G, "one generator", "check:size", vertices=1),))


def _ah_R1(G, claim, config):
    factors = irreducible_factors(G)
    if len(factors) > 1:
        chk = _check(G, f"Dynkin view has {len(factors)} components", "check:factors",
                     factors=_sets(factors))
        return Certificate(claim, Verdict.REFUTED, "R1", cite("ah:reducible"), (chk,),
                           {"factors": _sets(factors)})


def _ah_R2(G, claim, config):
    if is_spherical(G) and len(irreducible_factors(G)) == 1:
        chk = _check(G, "irreducible and spherical", "check:spherical", types=_types(G))
        return Certificate(claim, Verdict.REFUTED, "R2", cite("ah:spherical-center"), (chk,),
                           {"types": _types(G)},
                           ("A_G has infinite centre; the central quotient A_G/Z(A_G) IS "
                            "acylindrically hyperbolic",))


def _ah_P1(G, claim, config):
    if class_profile(G).raag:
        return Certificate(claim, Verdict.PROVEN, "P1", cite("ah:raag"),
                           (_check(G, "every finite label is 2", "check:raag"),))


def _ah_P2(G, claim, config):
    if class_profile(G).two_dimensional:
        return Certificate(claim, Verdict.PROVEN, "P2", cite("ah:2dim"), (_check(
            G, "has an edge and every triangle has 1/m+1/m+1/m <= 1", "check:2dim"),))


def _ah_P3(G, claim, config):
    prof = class_profile(G)
    if prof.affine:
        return Certificate(claim, Verdict.PROVEN, "P3", cite("ah:euclidean"), (_check(
            G, f"Euclidean type {prof.types[0]}", "check:affine", types=list(prof.types)),),
                           {"types": list(prof.types)})


def _ah_P4(G, claim, config):
    if is_join(G) is None:
        return Certificate(claim, Verdict.PROVEN, "P4", cite("ah:not-join"), (_check(
            G, "the graph of infinity-labeled pairs is connected", "check:not-join"),))


def _ah_P5(G, claim, config):
    prof = class_profile(G)
    if prof.even and prof.fc:
        ic = knows_ic(G, config) if config.on("IC7") else None
        premises = [_check(G, "all labels even and every clique spherical", "check:even-fc")]
        if ic is not None:
            premises.append(ic)
        return Certificate(claim, Verdict.PROVEN, "P5", cite("ah:even-fc"), tuple(premises))


def _ah_P6(G, claim, config, search):
    if not class_profile(G).fc:
        return None
    for sp in search.splittings:
        H = induced_subgraph(G, sp.omega)
        if is_spherical(H):
            chk = _check(G, "Omega is spherical", "check:spherical", omega=sorted(sp.omega),
                         types=_types(H))
            fc = _check(G, "every clique is spherical", "check:fc")
            return Certificate(claim, Verdict.PROVEN, "P6", cite("ah:fc-spherical-edge"),
                               (fc, chk), {"splitting": sp.to_dict()})


def _ah_P7(G, claim, config, search):
    for sp in search.splittings:
        ec = certify_edge_condition(G, sp, config)
        if ec:
            mo = Certificate(Claim("Check", G, statement="Minasyan-Osin side condition"),
                             Verdict.PROVEN, "mo:amalgam", cite("mo:amalgam"),
                             (_not_virtually_cyclic(G),))
            irr = _check(G, "Dynkin view is connected", "check:irreducible")
            return Certificate(claim, Verdict.PROVEN, "P7", cite("ah:splitting-edge-ip"),
                               (irr, ec, mo), {"splitting": sp.to_dict()})


WM_VERTEX_ROUTES = ("W1", "W2", "W3")


def _ah_P8(G, claim, config, search):
    for sp in search.splittings:
        for side, other in ((sp.gamma1, sp.gamma2), (sp.gamma2, sp.gamma1)):
            H = induced_subgraph(G, side)
            if contains_direct_factor(H, sp.omega):
                continue
            verdict, wm = certify_wm_conjecture(H, config)
            if verdict is not Verdict.PROVEN or wm.rule not in WM_VERTEX_ROUTES:
                continue
            oriented = Splitting(side, other, sp.omega)
            chk = _check(H, "Omega contains no direct factor of A_G1", "check:no-factor",
                         omega=sorted(sp.omega), factors=_sets(irreducible_factors(H)))
            mo = Certificate(Claim("Check", G, statement="Minasyan-Osin side condition"),
                             Verdict.PROVEN, "mo:amalgam", cite("mo:amalgam"),
                             (_not_virtually_cyclic(G),))
            return Certificate(claim, Verdict.PROVEN, "P8", cite("ah:wm-vertex-group"),
                               (chk, wm, mo), {"splitting": oriented.to_dict()})


_AH = {
    "R0": _ah_R0, "R1": _ah_R1, "R2": _ah_R2,
    "P1": _ah_P1, "P2": _ah_P2, "P3": _ah_P3, "P4": _ah_P4, "P5": _ah_P5,
    "P6": _ah_P6, "P7": _ah_P7, "P8": _ah_P8,
}
_NEEDS_SEARCH = {"P6", "P7", "P8"}


@lru_cache(maxsize=4096)
def certify_ah(G: PresentationGraph, config: RuleConfig = DEFAULT) -> tuple[Verdict, Certificate]:
    if not len(G):
        raise GraphError("the empty graph presents the trivial group; no AH claim")
    claim = Claim("AH", G)
    tried: list[str] = []
    for rule in AH_REFUTATIONS:
        if config.on(rule):
            tried.append(rule)
            cert = _AH[rule](G, claim, config)
            if cert is not None:
                return cert.verdict, cert
    # the conjecture's hypothesis: irreducible, non-spherical, non-cyclic
    if len(G) < 2 or len(irreducible_factors(G)) > 1 or is_spherical(G):
        cert = _unknown(claim, tried, ["proof rules need an irreducible non-spherical graph"])
        return cert.verdict, cert
    search = None
    for rule in config.ah_proof_order:
        if not config.on(rule):
            continue
        tried.append(rule)
        if rule in _NEEDS_SEARCH:
            search = search or _candidate_splittings(G, config)
            cert = _AH[rule](G, claim, config, search)
        else:
            cert = _AH[rule](G, claim, config)
        if cert is not None:
            if search is not None and search.notes:
                cert = _with_notes(cert, search.notes)
            return cert.verdict, cert
    notes = list(search.notes) if search else []
    cert = _unknown(claim, tried, notes)
    return cert.verdict, cert


def _with_notes(cert: Certificate, notes: Iterable[str]) -> Certificate:
    return Certificate(cert.claim, cert.verdict, cert.rule, cert.citation, cert.premises,
                       cert.witnesses, (*cert.notes, *notes))


# -- weak malnormality ---------------------------------------------------------------


@lru_cache(maxsize=4096)
def certify_wm_conjecture(G: PresentationGraph, config: RuleConfig = DEFAULT) -> tuple[Verdict, Certificate]:
    if not len(G):
        raise GraphError("the empty graph has no proper parabolic subgroups")
    claim = Claim("WMConjecture", G)
    tried: list[str] = []
    prof = class_profile(G)
    factors = irreducible_factors(G)
    irreducible = len(factors) == 1
    notes: tuple[str, ...] = ()

    def done(rule, anchor, premises, **w):
        cert = Certificate(claim, Verdict.PROVEN, rule, cite(anchor), tuple(premises), w, notes)
        return cert.verdict, cert

    if config.on("W1"):
        tried.append("W1")
        if prof.spherical:
            return done("W1", "wm:spherical",
                        [_check(G, "Coxeter group is finite", "check:spherical", types=_types(G))])
    if config.on("W2"):
        tried.append("W2")
        if prof.two_dimensional:
            return done("W2", "wm:2dim", [_check(
                G, "has an edge and every triangle has 1/m+1/m+1/m <= 1", "check:2dim")])
    splittable = irreducible and not is_clique(G)
    if config.on("W3"):
        tried.append("W3")
        if splittable:
            search = _candidate_splittings(G, config)
            notes = search.notes
            for sp in search.splittings:
                ec = certify_edge_condition(G, sp, config)
                if ec:
                    irr = _check(G, "Dynkin view is connected", "check:irreducible")
                    return done("W3", "wm:splitting-edge-ip", [irr, ec], splitting=sp.to_dict())
    if config.on("W4"):
        tried.append("W4")
        if splittable:
            ic = knows_ic(G, config)
            if ic:
                chk = _check(G, "irreducible and not a clique", "check:irreducible-nonclique")
                return done("W4", "wm:ic-implies-wm", [chk, ic])
    if config.on("W5"):
        tried.append("W5")
        if not irreducible:
            subs = [certify_wm_conjecture(induced_subgraph(G, F), config)[1] for F in factors]
            if all(s.verdict is Verdict.PROVEN for s in subs):
                chk = _check(G, f"A_G is a product of {len(factors)} irreducible factors",
                             "check:factors", factors=_sets(factors))
                return done("W5", "wm:products", [chk, *subs], factors=_sets(factors))
    cert = _unknown(claim, tried, notes)
    return cert.verdict, cert


def certify_wm_subgroup(G: PresentationGraph, S: Iterable[str],
                        config: RuleConfig = DEFAULT) -> tuple[Verdict, Certificate]:
    """Verdict on whether the standard parabolic ``A_S`` is weakly malnormal in ``A_G``."""
    S = vertex_set(G, S)
    if S == G.vertex_set:
        raise GraphError("S = V(G) is not a proper parabolic subgroup")
    claim = Claim("WMSubgroup", G, subset=S)
    inside = factors_inside(G, S)
    if inside:
        chk = _check(G, "S contains a direct factor", "check:contains-factor",
                     factors=_sets(inside), subset=sorted(S))
        cert = Certificate(claim, Verdict.REFUTED, "S-refute", cite("wm:contains-factor"), (chk,),
                           {"factors": _sets(inside)})
        return cert.verdict, cert
    verdict, wm = certify_wm_conjecture(G, config)
    if verdict is Verdict.PROVEN:
        chk = _check(G, "S contains no direct factor", "check:no-factor", subset=sorted(S))
        anchor = "wm:edge-group-to-all" if wm.rule == "W3" else wm.citation.anchor
        cert = Certificate(claim, Verdict.PROVEN, "S-prove", cite(anchor), (chk, wm))
        return cert.verdict, cert
    cert = _unknown(claim, ["S-refute", "S-prove"], [f"WM conjecture for G: {verdict}"])
    cert = Certificate(claim, cert.verdict, cert.rule, None, (wm,), cert.witnesses, cert.notes)
    return cert.verdict, cert


CLAIM_FUNCTIONS: dict[str, Callable] = {
    "ah": certify_ah,
    "wm": certify_wm_conjecture,
    "ic": certify_ic,
}
