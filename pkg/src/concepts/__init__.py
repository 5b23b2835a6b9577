"""
Concept language: AST, logic selectors, concrete syntax, semantics, sampling
and characteristic concepts.
"""
from concepts.ast import (
    And,
    Atomic,
    Concept,
    Difference,
    Exists,
    ExistsSelf,
    Intersection,
    Inverse,
    Name,
    Nominal,
    Not,
    Role,
    Union,
    bottom,
    concept_size,
    conjunction,
    disjunction,
    rank,
    required_logic,
    signature,
    top,
)
from concepts.logic import ALC, FULL, Extension, LogicSelector
from concepts.parser import parse, role_to_text, to_text
from concepts.semantics import extent, role_extent, satisfies
from concepts.sampling import ConceptSampler, random_concept
from concepts.characteristic import CharacteristicBuilder, characteristic_concept

__all__ = [
    "And", "Atomic", "Concept", "Difference", "Exists", "ExistsSelf", "Intersection",
    "Inverse", "Name", "Nominal", "Not", "Role", "Union",
    "bottom", "top", "conjunction", "disjunction", "concept_size", "rank",
    "required_logic", "signature",
    "ALC", "FULL", "Extension", "LogicSelector",
    "parse", "to_text", "role_to_text",
    "extent", "role_extent", "satisfies",
    "ConceptSampler", "random_concept",
    "CharacteristicBuilder", "characteristic_concept",
]
