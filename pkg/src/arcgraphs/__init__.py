"""Permutation-group engine and arc-transitive graph toolkit."""

from .perm import Permutation
from .gf import FiniteField, FieldElement, make_field
from .group import (
    CapExceeded,
    CosetSpace,
    PermGroup,
    StabilizerChain,
    conjugate_intersection,
    coset_space,
    normalizer_bruteforce,
    normalizes,
)
from .graphs import (
    Graph,
    GroupAction,
    TwoArcReport,
    count_s_arcs,
    is_normal_cover,
    is_s_arc_transitive,
    quotient_graph,
    semiregular_quotient_check,
)
from .constructions import (
    CayleyGraph,
    ConstructionTriple,
    CosetGraphResult,
    action_on_2subsets,
    action_on_cosets,
    action_on_ordered_pairs,
    build_agl1,
    build_alt,
    build_construction,
    build_cyclic,
    build_dihedral,
    build_pgl2,
    build_sym,
    cayley_graph,
    construction_graph,
    coset_graph,
    orbital_graph,
    perm_from_field_map,
)
from .verify import (
    ConstructionCertificate,
    SabidussiCertificate,
    check_normalizer_lemma,
    check_order_bound,
    check_sabidussi,
    sabidussi_search,
    scan_orbital_graphs,
    verify_construction,
)

__version__ = "0.1.0"

__all__ = [
    "Permutation", "FiniteField", "FieldElement", "make_field",
    "PermGroup", "StabilizerChain", "CosetSpace", "CapExceeded",
    "coset_space", "normalizes", "normalizer_bruteforce",
    "conjugate_intersection",
    "Graph", "GroupAction", "TwoArcReport", "count_s_arcs",
    "is_s_arc_transitive", "quotient_graph", "is_normal_cover",
    "semiregular_quotient_check",
    "build_sym", "build_alt", "build_cyclic", "build_dihedral",
    "build_agl1", "build_pgl2", "build_construction", "construction_graph",
    "cayley_graph", "coset_graph", "orbital_graph", "perm_from_field_map",
    "action_on_ordered_pairs", "action_on_2subsets", "action_on_cosets",
    "CayleyGraph", "ConstructionTriple", "CosetGraphResult",
    "check_sabidussi", "sabidussi_search", "verify_construction",
    "scan_orbital_graphs", "check_normalizer_lemma", "check_order_bound",
    "SabidussiCertificate", "ConstructionCertificate",
]
