"""Results the rule engine is allowed to apply, keyed by anchor.

Statements are terse formal summaries.  ``IC`` is the intersection property
(intersections of parabolic subgroups are parabolic), ``WM`` the weak
malnormality property for proper standard parabolics, ``AH`` acylindrical
hyperbolicity.
"""

from __future__ import annotations

from .certificate import Citation

_TABLE = {
    # intersection property: known classes and closure lemmas
    "ic:three-generators": "Every Artin group on at most 3 generators satisfies IC.",
    "ic:spherical": "Spherical-type Artin groups satisfy IC "
                    "[Cumplido-Gebhardt-Gonzalez-Meneses-Wiest].",
    "ic:raag": "Right-angled Artin groups satisfy IC [Antolin-Minasyan].",
    "ic:large": "Large-type Artin groups (all m_st >= 3) satisfy IC [Cumplido-Martin-Vaskou].",
    "ic:22-free-2dim": "Two-dimensional Artin groups whose graph has no two adjacent edges "
                       "labeled 2 satisfy IC [Blufstein].",
    "ic:affine-AC": "Euclidean-type Artin groups of type ~A_n and ~C_n satisfy IC "
                    "[Haettel].",
    "ic:even-fc": "Even FC-type Artin groups satisfy IC [Antolin-Foniqi].",
    "ic:reducible": "A direct product of Artin groups satisfying IC satisfies IC: "
                    "parabolics split factorwise and intersect factorwise.",
    # edge-group intersections
    "ec:ambient-ic": "If A_G satisfies IC then any two conjugates of A_Omega intersect "
                     "in a parabolic subgroup.",
    "ec:vertex-groups": "For a visual splitting A_G1 *_{A_Omega} A_G2 with A_G1 and A_G2 "
                        "satisfying IC, any two conjugates of A_Omega intersect in a "
                        "parabolic subgroup (Bass-Serre tree is CAT(0), vertex "
                        "stabilisers satisfy IC).",
    "ec:2-convex": "If Omega is 2-convex, A_Omega and every clique parabolic satisfy IC, "
                   "then any two conjugates of A_Omega intersect in a parabolic subgroup "
                   "(Godelle-Paris cube complex for the cover cliques + subsets of Omega "
                   "is CAT(0) since its link is flag).",
    "ec:trivial": "A trivial edge group: every conjugate intersection is the trivial "
                  "(parabolic) subgroup.",
    "gp:flag-criterion": "Godelle-Paris: for a complete cover U, the cube complex X_U is "
                         "CAT(0) iff the link complex L_U is flag.",
    "lemma:2-convex-flag": "For Omega 2-convex, the cover by all cliques and all subsets of "
                           "Omega has a flag link complex.",
    # acylindrical hyperbolicity
    "ah:reducible": "A direct product of two infinite groups is not acylindrically "
                    "hyperbolic.",
    "ah:spherical-center": "An irreducible spherical-type Artin group has infinite cyclic "
                           "centre, so A_G is not AH; its central quotient is AH "
                           "[Calvez-Wiest].",
    "ah:cyclic": "A_G on one generator is Z, which is virtually cyclic and not AH.",
    "ah:raag": "Irreducible non-cyclic right-angled Artin groups are AH [Osin].",
    "ah:2dim": "Irreducible two-dimensional Artin groups are AH [Vaskou].",
    "ah:euclidean": "Irreducible Euclidean-type Artin groups are AH [Calvez].",
    "ah:not-join": "Artin groups whose graph is not a join (and has >= 2 vertices) are AH "
                   "[Charney-Morris-Wright].",
    "ah:even-fc": "Irreducible non-spherical even FC-type Artin groups are AH: IC holds, so "
                  "any visual splitting satisfies the edge-intersection hypothesis.",
    "ah:fc-spherical-edge": "An irreducible FC-type Artin group splitting visually over a "
                            "spherical-type parabolic is AH (the cubical Deligne complex is "
                            "CAT(0), so conjugates of A_Omega intersect parabolically).",
    "ah:splitting-edge-ip": "Irreducible A_G = A_G1 *_{A_Omega} A_G2 visually, with any two "
                            "conjugates of A_Omega intersecting in a parabolic subgroup: "
                            "A_Omega is weakly malnormal and A_G is AH.",
    "ah:wm-vertex-group": "A visual splitting where A_Omega contains no direct factor of "
                          "A_G1 and A_G1 satisfies WM (spherical, two-dimensional, or "
                          "edge-intersection hypothesis): A_Omega is weakly malnormal in "
                          "A_G1, hence in A_G, so A_G is AH.",
    "mo:amalgam": "Minasyan-Osin: G = A *_C B with A != C != B and C weakly malnormal "
                  "implies G is virtually cyclic or AH.",
    # weak malnormality
    "wm:spherical": "Spherical-type Artin groups satisfy WM.",
    "wm:2dim": "Two-dimensional Artin groups satisfy WM.",
    "wm:splitting-edge-ip": "An irreducible A_G with a visual splitting whose edge group has "
                            "parabolic conjugate intersections satisfies WM: A_Omega is "
                            "weakly malnormal, hence so is every proper parabolic.",
    "wm:ic-implies-wm": "If A_G is irreducible, G is not a clique and A_G satisfies IC, "
                        "then A_G satisfies WM.",
    "wm:products": "A direct product of irreducible Artin groups satisfying WM satisfies WM.",
    "wm:contains-factor": "A standard parabolic containing a direct factor A_F contains the "
                          "infinite normal subgroup A_F, so every conjugate intersection is "
                          "infinite: not weakly malnormal.",
    "wm:edge-group-to-all": "If A_G is irreducible and visually splits over a weakly "
                            "malnormal A_Omega, every proper parabolic of A_G is weakly "
                            "malnormal.",
    "normal:product-of-factors": "A standard parabolic is normal iff it is a product of "
                                 "direct factors; for irreducible A_G only 1 and A_G.",
}


def cite(anchor: str) -> Citation:
    return Citation(anchor, _TABLE[anchor])


def anchors() -> list[str]:
    return sorted(_TABLE)
