"""
Seeded random interpretations for property checks and the CLI oracle.
"""
from __future__ import annotations

import random
from typing import Dict, List, Union

from model.graph import reachable
from model.interpretation import Interpretation, PointedInterpretation
from model.vocabulary import Vocabulary

Seed = Union[int, random.Random, None]


def _rng(seed: Seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def element_names(size: int) -> List[str]:
    return [f"e{n}" for n in range(size)]


def random_interpretation(
    vocab: Vocabulary,
    size: int,
    seed: Seed = None,
    edge_probability: float = 0.3,
    concept_probability: float = 0.4,
) -> Interpretation:
    """A random interpretation over `size` elements named e0, e1, ...

    Every individual is mapped to a uniformly chosen element.
    """
    rng = _rng(seed)
    domain = element_names(max(size, 1))
    concepts = {
        name: {d for d in domain if rng.random() < concept_probability}
        for name in sorted(vocab.concepts)
    }
    roles = {
        name: {(a, b) for a in domain for b in domain if rng.random() < edge_probability}
        for name in sorted(vocab.roles)
    }
    individuals = {name: rng.choice(domain) for name in sorted(vocab.individuals)}
    return Interpretation.build(domain, individuals, concepts, roles, vocab)


def random_pointed(
    vocab: Vocabulary,
    size: int,
    seed: Seed = None,
    edge_probability: float = 0.3,
    concept_probability: float = 0.4,
    reachable_individuals: bool = True,
) -> PointedInterpretation:
    """A random interpretation pointed at e0.

    With `reachable_individuals`, individuals are remapped into the Gaifman
    component of the point so that the nominal reduction applies.
    """
    rng = _rng(seed)
    interp = random_interpretation(vocab, size, rng, edge_probability, concept_probability)
    point = "e0"
    if reachable_individuals and vocab.individuals:
        component = sorted(reachable(interp, point))
        individuals: Dict[str, str] = {name: rng.choice(component) for name in sorted(vocab.individuals)}
        interp = Interpretation.build(interp.domain, individuals, interp.concept_ext,
                                      interp.role_ext, vocab)
    return PointedInterpretation(interp, point)


def perturbed_copy(p: PointedInterpretation, seed: Seed = None,
                   extra_edges: int = 2, extra_labels: int = 2,
                   extra_elements: int = 1) -> PointedInterpretation:
    """A superstructure of `p` with a few added elements, labels and edges.

    The inclusion map is always a homomorphism into the result.
    """
    rng = _rng(seed)
    i = p.interp
    domain = sorted(i.domain)
    fresh = [f"x{n}" for n in range(extra_elements)]
    everything = domain + fresh
    concepts = {k: set(v) for k, v in i.concept_ext.items()}
    roles = {k: set(v) for k, v in i.role_ext.items()}
    concept_names = sorted(i.vocab.concepts)
    role_names = sorted(i.vocab.roles)
    for _ in range(extra_labels if concept_names else 0):
        concepts.setdefault(rng.choice(concept_names), set()).add(rng.choice(everything))
    for _ in range(extra_edges if role_names else 0):
        roles.setdefault(rng.choice(role_names), set()).add((rng.choice(everything), rng.choice(everything)))
    interp = Interpretation.build(everything, i.individual_map, concepts, roles, i.vocab)
    return PointedInterpretation(interp, p.point)


def small_vocabulary(concepts: int = 2, roles: int = 2, individuals: int = 0) -> Vocabulary:
    """Vocabulary A, B, ... / r, s, ... / o, o1, ... with the requested sizes."""
    concept_names = ["A", "B", "C", "D"][:concepts]
    role_names = ["r", "s", "t", "u"][:roles]
    individual_names = ["o", "o1", "o2"][:individuals]
    return Vocabulary.of(individual_names, concept_names, role_names)
