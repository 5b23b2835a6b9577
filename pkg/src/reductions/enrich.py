"""
Self-, inverse- and b-enrichment.

Each enrichment keeps the domain, the point and every existing extent, and
adds fresh symbols that let a plain ALC game see what the richer game sees:
self-loops become concept names, inverse edges become forward edges, and
each realized set of connecting roles becomes a role of its own.
"""
from __future__ import annotations

import logging
from typing import Dict, List, Tuple

from model.interpretation import Interpretation, PointedInterpretation
from reductions.vocab_maps import inverse_role, self_concept, subset_role, vocab_map

logger = logging.getLogger(__name__)

Manifest = Dict[str, List[str]]


def self_enrichment(p: PointedInterpretation) -> Tuple[PointedInterpretation, Manifest]:
    i = p.interp
    vocab = vocab_map(i.vocab, "Self")
    concepts = dict(i.concept_ext)
    generated = []
    for r in sorted(i.vocab.roles):
        name = self_concept(r)
        concepts[name] = frozenset(a for a, b in i.role_ext.get(r, ()) if a == b)
        generated.append(name)
    out = Interpretation(i.domain, i.individual_map, concepts, i.role_ext, vocab)
    return PointedInterpretation(out, p.point), {"concepts": generated}


def inverse_enrichment(p: PointedInterpretation) -> Tuple[PointedInterpretation, Manifest]:
    i = p.interp
    vocab = vocab_map(i.vocab, "I")
    roles = dict(i.role_ext)
    generated = []
    for r in sorted(i.vocab.roles):
        name = inverse_role(r)
        roles[name] = frozenset((b, a) for a, b in i.role_ext.get(r, ()))
        generated.append(name)
    out = Interpretation(i.domain, i.individual_map, i.concept_ext, roles, vocab)
    return PointedInterpretation(out, p.point), {"roles": generated}


def boolean_enrichment(p: PointedInterpretation) -> Tuple[PointedInterpretation, Manifest]:
    """Add r_S for every realized non-empty set S of connecting roles.

    The vocabulary declares all non-empty subsets; only realized ones get a
    stored extent, the rest are empty by convention. Original roles stay.
    """
    i = p.interp
    vocab = vocab_map(i.vocab, "b")
    grouped: Dict[str, set] = {}
    for a in i.domain:
        for b in i.domain:
            connecting = i.two_type(a, b) & i.vocab.roles
            if connecting:
                grouped.setdefault(subset_role(connecting), set()).add((a, b))
    roles = dict(i.role_ext)
    for name, pairs in grouped.items():
        roles[name] = frozenset(pairs)
    out = Interpretation(i.domain, i.individual_map, i.concept_ext, roles, vocab)
    logger.debug("b-enrichment: %d realized role sets", len(grouped))
    return PointedInterpretation(out, p.point), {"roles": sorted(grouped)}


def tau_self(p: PointedInterpretation) -> PointedInterpretation:
    return self_enrichment(p)[0]


def tau_inv(p: PointedInterpretation) -> PointedInterpretation:
    return inverse_enrichment(p)[0]


def tau_b(p: PointedInterpretation) -> PointedInterpretation:
    return boolean_enrichment(p)[0]
