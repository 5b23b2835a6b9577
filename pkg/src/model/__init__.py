"""
Model core: vocabularies, finite interpretations, reducts, reachability and morphisms.
"""
from model.vocabulary import Vocabulary
from model.interpretation import (
    Element,
    Interpretation,
    Pair,
    PointedInterpretation,
    reduct,
    require_valid,
    validate_interpretation,
)
from model.graph import (
    forward_distances,
    forward_reachable,
    gaifman_distances,
    gaifman_graph,
    reachable,
    role_graph,
)
from model.morphism import (
    MorphismKind,
    MorphismWitness,
    check_morphism,
    compose,
    find_homomorphism,
    identity_witness,
)
from model.random_models import perturbed_copy, random_interpretation, random_pointed, small_vocabulary

__all__ = [
    "Vocabulary",
    "Element",
    "Pair",
    "Interpretation",
    "PointedInterpretation",
    "validate_interpretation",
    "require_valid",
    "reduct",
    "reachable",
    "forward_reachable",
    "gaifman_distances",
    "forward_distances",
    "gaifman_graph",
    "role_graph",
    "MorphismKind",
    "MorphismWitness",
    "check_morphism",
    "compose",
    "find_homomorphism",
    "identity_witness",
    "random_interpretation",
    "random_pointed",
    "perturbed_copy",
    "small_vocabulary",
]
