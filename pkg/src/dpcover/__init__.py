"""Families of forbidden partial 0/1 assignments on hypergraphs.

Construct the explicit gadget families, certify non-colorability by
exhaustive or sampled enumeration, compute exact dyadic weights and signed
weight identities, search for minimum unary families, and export unary
families as DIMACS CNF.
"""

from .analysis import (
    ColorabilityReport,
    MultiplicityTable,
    ParityResidual,
    SampleReport,
    WeightOneAudit,
    avoiding_codes,
    check_claim,
    check_claims,
    complement_pair_parity_mismatches,
    cover_multiplicity,
    domination_orphans,
    find_coloring,
    map_weight,
    parity_identity,
    sample_noncolorability,
    sub_family,
    weight,
    weight_lower_bound_certificate,
    weight_one_audit,
)
from .cli import cli_main, export_cnf, parse, serialize
from .constructions import (
    GadgetOutput,
    binary_family,
    binary_family_profile,
    copy_gadget,
    double_unary,
    double_unary_gadget,
    five_uniform_17,
    four_uniform_10,
    join_with_pivot,
    k43_cover,
    k54_eq_cover,
    k54_neq_cover,
    lift_to_cover,
    nine_edge_gadget,
    parity_gadget,
    two_edge_gadget,
    unary_upper_even,
    uniformize,
)
from .core import (
    Coloring,
    Family,
    FamilyProfile,
    Hypergraph,
    PartialMap,
    avoids,
    classify,
    colors,
    complement,
    domain_hypergraph,
    make_partial_map,
    relabel_family,
)
from .dyadic import Dyadic
from .errors import (
    DpcoverError,
    DuplicateMapError,
    DuplicateVertexError,
    EmptyMapPresentError,
    NotUnaryError,
    OddRError,
    OutOfUniverseError,
    OverlappingTriplesError,
    PartnerCollisionError,
    SearchSpaceTooLargeError,
    UniverseOverlapError,
    UniverseTooLargeError,
)
from .search import (
    BracketReport,
    CanonicalKey,
    MinimalityReport,
    canonical_key,
    delete_vertex_constraint,
    search_min_unary,
    single_domain_vertices,
    verify_bracket,
)

__all__ = [
    "BracketReport",
    "CanonicalKey",
    "Coloring",
    "ColorabilityReport",
    "Dyadic",
    "DpcoverError",
    "DuplicateMapError",
    "DuplicateVertexError",
    "EmptyMapPresentError",
    "Family",
    "FamilyProfile",
    "GadgetOutput",
    "Hypergraph",
    "MinimalityReport",
    "MultiplicityTable",
    "NotUnaryError",
    "OddRError",
    "OutOfUniverseError",
    "OverlappingTriplesError",
    "ParityResidual",
    "PartialMap",
    "PartnerCollisionError",
    "SampleReport",
    "SearchSpaceTooLargeError",
    "UniverseOverlapError",
    "UniverseTooLargeError",
    "WeightOneAudit",
    "avoiding_codes",
    "avoids",
    "binary_family",
    "binary_family_profile",
    "canonical_key",
    "check_claim",
    "check_claims",
    "classify",
    "cli_main",
    "colors",
    "complement",
    "complement_pair_parity_mismatches",
    "copy_gadget",
    "cover_multiplicity",
    "delete_vertex_constraint",
    "domain_hypergraph",
    "domination_orphans",
    "double_unary",
    "double_unary_gadget",
    "export_cnf",
    "find_coloring",
    "five_uniform_17",
    "four_uniform_10",
    "join_with_pivot",
    "k43_cover",
    "k54_eq_cover",
    "k54_neq_cover",
    "lift_to_cover",
    "make_partial_map",
    "map_weight",
    "nine_edge_gadget",
    "parity_gadget",
    "parity_identity",
    "parse",
    "relabel_family",
    "sample_noncolorability",
    "search_min_unary",
    "serialize",
    "single_domain_vertices",
    "sub_family",
    "two_edge_gadget",
    "unary_upper_even",
    "uniformize",
    "verify_bracket",
    "weight",
    "weight_lower_bound_certificate",
    "weight_one_audit",
]
