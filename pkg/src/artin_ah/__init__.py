"""Certificates for acylindrical hyperbolicity, weak malnormality and parabolic
intersections of Artin groups, derived from a labeled presentation graph."""

from .certificate import Certificate, Citation, Claim, Verdict
from .cover import (CompleteCover, LinkComplex, cliques_cover, cliques_plus_cover, explicit_cover,
                    generated_cover, hollow_cover, is_flag, link_complex, validate_cover)
from .coxeter import (ClassProfile, CoxeterType, Signature, class_profile, cosine_signature,
                      coxeter_type, is_spherical, spherical_decomposition)
from .engine import (RuleConfig, certify_ah, certify_edge_condition, certify_ic,
                     certify_wm_conjecture, certify_wm_subgroup)
from .generators import NamedFamily, catalog, generate
from .graph import (INF, GraphError, ParseError, PresentationGraph, distance2_pairs, dynkin_view,
                    induced_subgraph, is_clique, parse_graph, parse_json_graph, serialize_graph,
                    serialize_json_graph)
from .structure import (Splitting, enumerate_visual_splittings, irreducible_factors, is_2convex,
                        is_irreducible, is_join, normal_standard_parabolics)

__version__ = "0.1.0"

__all__ = [
    "INF", "Certificate", "Citation", "Claim", "ClassProfile", "CompleteCover", "CoxeterType",
    "GraphError", "LinkComplex", "NamedFamily", "ParseError", "PresentationGraph", "RuleConfig",
    "Signature", "Splitting", "Verdict", "catalog", "certify_ah", "certify_edge_condition",
    "certify_ic", "certify_wm_conjecture", "certify_wm_subgroup", "class_profile", "cliques_cover",
    "cliques_plus_cover", "cosine_signature", "coxeter_type", "distance2_pairs", "dynkin_view",
    "enumerate_visual_splittings", "explicit_cover", "generate", "generated_cover", "hollow_cover",
    "induced_subgraph", "irreducible_factors", "is_2convex", "is_clique", "is_flag",
    "is_irreducible", "is_join", "is_spherical", "link_complex", "normal_standard_parabolics",
    "parse_graph", "parse_json_graph", "serialize_graph", "serialize_json_graph",
    "spherical_decomposition", "validate_cover",
]
