"""
Game-preserving reductions from ALC_Self I b O down to ALC.
"""
from reductions.vocab_maps import (
    VOCABULARY_MAPS,
    FreshNames,
    VocabularyMap,
    copy_element,
    distance_role,
    inverse_role,
    marker_concept,
    nominal_concept,
    self_concept,
    subset_role,
    vocab_map,
    vocab_map_phi,
)
from reductions.enrich import boolean_enrichment, inverse_enrichment, self_enrichment, tau_b, tau_inv, tau_self
from reductions.nominals import nominal_reduction, tau_o
from reductions.compose import ReductionReport, phi_homomorphism, reduce_with_report, tau_phi

__all__ = [
    "VOCABULARY_MAPS", "FreshNames", "VocabularyMap", "vocab_map", "vocab_map_phi",
    "copy_element", "distance_role", "inverse_role", "marker_concept", "nominal_concept",
    "self_concept", "subset_role",
    "self_enrichment", "inverse_enrichment", "boolean_enrichment", "nominal_reduction",
    "tau_self", "tau_inv", "tau_b", "tau_o", "tau_phi",
    "ReductionReport", "reduce_with_report", "phi_homomorphism",
]
