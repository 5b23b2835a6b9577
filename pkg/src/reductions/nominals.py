"""
Nominal reduction: from an ALCO-style game to a plain ALC game.

The construction has four steps:
  A. restrict to the elements connected to the point;
  B. for every edge d -r-> o^I add a trampoline labelled @nom:o:r hanging off d;
  C. split into one component per root x (the point and each named element),
     deleting every other named element and keeping what x still reaches;
  D. link the point's copy to each nominal's component by a chain of dummies on
     @dist:o whose length is the distance from the point to o^I.

`reach` picks how connectivity and distances are measured. "gaifman" uses
the undirected Gaifman graph; "forward" follows role edges from source to
target, which is what a game without inverse moves can explore. With
inverse roles already present the two coincide. In forward mode a nominal
the point cannot reach gets a looping dummy instead of a chain.
"""
from __future__ import annotations

import logging
from collections import defaultdict
from typing import Dict, List, Set, Tuple

import networkx as nx

from errors import (
    FreshNameCollisionError,
    PreconditionError,
    UnmappedIndividualError,
    UnreachableNominalError,
)
from model.graph import forward_distances, gaifman_distances, reachable
from model.interpretation import Element, Interpretation, PointedInterpretation
from reductions.enrich import Manifest
from reductions.vocab_maps import (
    copy_element,
    distance_role,
    dummy_element,
    marker_concept,
    never_element,
    nominal_concept,
    trampoline_element,
    vocab_map,
)

logger = logging.getLogger(__name__)

REACH_MODES = ("gaifman", "forward")


def nominal_reduction(p: PointedInterpretation, reach: str = "gaifman") -> Tuple[PointedInterpretation, Manifest]:
    if reach not in REACH_MODES:
        raise PreconditionError(f"reach must be one of {', '.join(REACH_MODES)}")
    i = p.interp
    vocab = vocab_map(i.vocab, "O")

    unmapped = sorted(o for o in i.vocab.individuals if i.individual_map.get(o) is None)
    if unmapped:
        raise UnmappedIndividualError(f"individuals without an element: {', '.join(unmapped)}")
    reserved = sorted(d for d in i.domain if d.startswith("@"))
    if reserved:
        raise FreshNameCollisionError(f"element names may not start with '@': {', '.join(reserved)}")
    named: Dict[str, Element] = {o: i.individual_map[o] for o in sorted(i.vocab.individuals)}
    connected = reachable(i, p.point)
    stray = [o for o, e in named.items() if e not in connected]
    if stray:
        raise UnreachableNominalError(f"nominals not connected to the point {p.point}: {', '.join(stray)}")
    if reach == "gaifman":
        distance = gaifman_distances(i, p.point)
    else:
        distance = forward_distances(i, p.point, i.vocab.roles)

    # A. restrict to the point's connected part
    domain: Set[Element] = set(connected)
    concepts: Dict[str, Set[Element]] = {c: set(ext & connected) for c, ext in i.concept_ext.items()}
    roles: Dict[str, Set[Tuple[Element, Element]]] = {
        r: {(a, b) for a, b in ext if a in connected and b in connected} for r, ext in i.role_ext.items()
    }

    # B. trampolines, one per (d, o, r)
    names_of: Dict[Element, List[str]] = defaultdict(list)
    for o, e in named.items():
        names_of[e].append(o)
    for r in sorted(i.vocab.roles):
        for d, e in sorted(roles.get(r, ())):
            for o in names_of.get(e, ()):
                t = trampoline_element(d, o, r)
                domain.add(t)
                roles.setdefault(r, set()).add((d, t))
                concepts.setdefault(nominal_concept(o, r), set()).add(t)

    # C. components
    named_elements = set(named.values())
    roots = [p.point] + sorted(named_elements - {p.point})
    out_domain: Set[Element] = set()
    out_concepts: Dict[str, Set[Element]] = defaultdict(set)
    out_roles: Dict[str, Set[Tuple[Element, Element]]] = defaultdict(set)
    copies: List[str] = []
    trampolines: List[str] = []
    for x in roots:
        kept = _component(domain, roles, named_elements - {x}, x, reach)
        for d in kept:
            c = copy_element(x, d)
            out_domain.add(c)
            (trampolines if d.startswith("@tramp:") else copies).append(c)
        for name, ext in concepts.items():
            out_concepts[name].update(copy_element(x, d) for d in ext if d in kept)
        for name, ext in roles.items():
            out_roles[name].update((copy_element(x, a), copy_element(x, b))
                                   for a, b in ext if a in kept and b in kept)
        for o in names_of.get(x, ()):
            out_concepts[marker_concept(o)].add(copy_element(x, x))

    # D. distance chains
    point_copy = copy_element(p.point, p.point)
    dummies: List[str] = []
    for o, e in named.items():
        link = distance_role(o)
        if e == p.point:
            continue
        root_copy = copy_element(e, e)
        steps = distance.get(e)
        if steps is None:
            loop = never_element(o)
            out_domain.add(loop)
            dummies.append(loop)
            out_roles[link].update({(point_copy, loop), (loop, loop)})
            continue
        chain = [point_copy] + [dummy_element(o, n) for n in range(1, steps)] + [root_copy]
        for dummy in chain[1:-1]:
            out_domain.add(dummy)
            dummies.append(dummy)
        out_roles[link].update(zip(chain, chain[1:]))

    out = Interpretation(
        domain=frozenset(out_domain),
        individual_map={o: copy_element(e, e) for o, e in named.items()},
        concept_ext={c: frozenset(ext) for c, ext in out_concepts.items() if ext},
        role_ext={r: frozenset(ext) for r, ext in out_roles.items() if ext},
        vocab=vocab,
    )
    logger.info("nominal reduction (%s): %d -> %d elements, %d components",
                reach, len(i.domain), len(out_domain), len(roots))
    manifest: Manifest = {
        "concepts": sorted(c for c in vocab.concepts - i.vocab.concepts),
        "roles": sorted(r for r in vocab.roles - i.vocab.roles),
        "trampolines": sorted(trampolines),
        "dummies": sorted(dummies),
        "copies": sorted(copies),
    }
    return PointedInterpretation(out, point_copy), manifest


def _component(domain: Set[Element], roles: Dict[str, Set[Tuple[Element, Element]]],
               deleted: Set[Element], root: Element, reach: str) -> Set[Element]:
    g = nx.Graph() if reach == "gaifman" else nx.DiGraph()
    g.add_nodes_from(domain - deleted)
    for ext in roles.values():
        g.add_edges_from((a, b) for a, b in ext if a not in deleted and b not in deleted)
    if reach == "gaifman":
        return set(nx.node_connected_component(g, root))
    return set(nx.descendants(g, root)) | {root}


def tau_o(p: PointedInterpretation, reach: str = "gaifman") -> PointedInterpretation:
    return nominal_reduction(p, reach)[0]
