"""Tools for deciding, searching for, constructing and certifying
link-irregular digraphs and tournaments."""

from .graphs import Digraph, LabeledGraph, UndirectedGraph, two_degree_coincidence
from .links import LinkProfile, Signature, directed_triangles_through, link, link_profile, signature
from .iso import (
    are_isomorphic,
    are_isomorphic_labeled,
    are_isomorphic_undirected,
    brute_force_isomorphic,
    find_isomorphism,
    mapping_is_isomorphism,
)
from .verify import (
    BoundReport,
    Certificate,
    bound_report,
    check_bounds,
    check_triangle_necessity,
    conflict_pairs,
    is_link_irregular,
)
from .enumeration import (
    EnumSpec,
    count_link_irregular,
    count_link_irregular_orientations,
    enumerate_digraphs,
    enumerate_orientations,
    universe_size,
)
from .search import (
    DEFAULT_BUDGET,
    SearchBudget,
    SearchReport,
    WitnessLibrary,
    extend_dominated,
    extend_dominating,
    hill_climb,
    random_search,
    random_tournament,
    search,
    seeded_extension,
)
from .labeling import (
    admits_link_irregular_labeling,
    check_orientable_implies_labelable,
    is_link_irregular_orientable,
    verify_labeling,
)

__version__ = "0.1.0"

__all__ = [
    "Digraph", "UndirectedGraph", "LabeledGraph", "two_degree_coincidence",
    "Signature", "LinkProfile", "link", "signature", "link_profile",
    "directed_triangles_through",
    "are_isomorphic", "are_isomorphic_undirected", "are_isomorphic_labeled",
    "find_isomorphism", "mapping_is_isomorphism", "brute_force_isomorphic",
    "Certificate", "BoundReport", "conflict_pairs", "is_link_irregular",
    "bound_report", "check_bounds", "check_triangle_necessity",
    "EnumSpec", "universe_size", "enumerate_digraphs", "enumerate_orientations",
    "count_link_irregular", "count_link_irregular_orientations",
    "SearchBudget", "SearchReport", "DEFAULT_BUDGET", "WitnessLibrary",
    "random_tournament", "random_search", "hill_climb", "seeded_extension",
    "search", "extend_dominating", "extend_dominated",
    "admits_link_irregular_labeling", "verify_labeling",
    "is_link_irregular_orientable", "check_orientable_implies_labelable",
]
