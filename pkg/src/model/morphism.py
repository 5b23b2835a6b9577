"""
Point-preserving morphisms between pointed interpretations.

`check_morphism` decides whether a supplied map is a homomorphism, a strong
homomorphism or an embedding; `find_homomorphism` searches for one.
"""
from __future__ import annotations

import logging
import random
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Mapping, Optional

from model.interpretation import Element, Interpretation, PointedInterpretation

logger = logging.getLogger(__name__)


class MorphismKind(str, Enum):
    HOMOMORPHISM = "homomorphism"
    STRONG = "strong-homomorphism"
    EMBEDDING = "embedding"


@dataclass(frozen=True)
class MorphismWitness:
    mapping: Mapping[Element, Element]
    kind: MorphismKind = MorphismKind.HOMOMORPHISM

    def __post_init__(self):
        object.__setattr__(self, "mapping", dict(self.mapping))
        object.__setattr__(self, "kind", MorphismKind(self.kind))

    def __call__(self, element: Element) -> Element:
        return self.mapping[element]


def identity_witness(p: PointedInterpretation,
                     kind: MorphismKind = MorphismKind.HOMOMORPHISM) -> MorphismWitness:
    return MorphismWitness({d: d for d in p.domain}, kind)


def check_morphism(h: MorphismWitness, src: PointedInterpretation, dst: PointedInterpretation) -> bool:
    mapping = h.mapping
    if set(mapping) != set(src.domain):
        return False
    if any(v not in dst.domain for v in mapping.values()):
        return False
    if mapping[src.point] != dst.point:
        return False

    s, t = src.interp, dst.interp
    for name, ext in s.concept_ext.items():
        target = t.concept_ext.get(name, frozenset())
        if any(mapping[d] not in target for d in ext):
            return False
    for name, ext in s.role_ext.items():
        target = t.role_ext.get(name, frozenset())
        if any((mapping[a], mapping[b]) not in target for a, b in ext):
            return False
    for name, d in s.individual_map.items():
        if t.individual_map.get(name) != mapping[d]:
            return False
    if h.kind == MorphismKind.HOMOMORPHISM:
        return True

    # strong: memberships in the image are reflected back
    names = set(s.concept_ext) | set(t.concept_ext)
    for name in names:
        source = s.concept_ext.get(name, frozenset())
        target = t.concept_ext.get(name, frozenset())
        if any(mapping[d] in target and d not in source for d in s.domain):
            return False
    for name in set(s.role_ext) | set(t.role_ext):
        source = s.role_ext.get(name, frozenset())
        target = t.role_ext.get(name, frozenset())
        for a in s.domain:
            for b in s.domain:
                if (mapping[a], mapping[b]) in target and (a, b) not in source:
                    return False
    if h.kind == MorphismKind.STRONG:
        return True
    return len(set(mapping.values())) == len(mapping)


def compose(g: MorphismWitness, f: MorphismWitness,
            kind: MorphismKind = MorphismKind.HOMOMORPHISM) -> MorphismWitness:
    """g after f."""
    return MorphismWitness({d: g.mapping[e] for d, e in f.mapping.items()}, kind)


# ── Homomorphism search ──────────────────────────────────────────────

def find_homomorphism(
    src: PointedInterpretation,
    dst: PointedInterpretation,
    rng: Optional[random.Random] = None,
    max_steps: int = 100_000,
) -> Optional[MorphismWitness]:
    """Backtracking search for a point-preserving homomorphism.

    Elements are assigned in breadth-first order from the source point so
    that edge constraints are checked as early as possible. With `rng`,
    candidates are tried in a shuffled order, which samples different
    homomorphisms across calls. Returns None when none exists or the step
    budget runs out.
    """
    s, t = src.interp, dst.interp
    order = _assignment_order(s, src.point)
    constraints = _edge_constraints(s, order)
    targets = sorted(dst.domain)

    def candidates(d: Element) -> List[Element]:
        labels = s.labels(d)
        names = s.names_of(d)
        out = [e for e in targets
               if labels <= t.labels(e) and all(t.individual_map.get(o) == e for o in names)]
        if rng is not None:
            rng.shuffle(out)
        return out

    assignment: Dict[Element, Element] = {}
    steps = 0

    def extend(idx: int) -> bool:
        nonlocal steps
        if idx == len(order):
            return True
        d = order[idx]
        options = [dst.point] if d == src.point else candidates(d)
        if d == src.point and not (s.labels(d) <= t.labels(dst.point)
                                   and all(t.individual_map.get(o) == dst.point for o in s.names_of(d))):
            return False
        for e in options:
            steps += 1
            if steps > max_steps:
                return False
            ok = True
            for role, other, outgoing in constraints[d]:
                image = assignment.get(other, e if other == d else None)
                if image is None:
                    continue
                pair = (e, image) if outgoing else (image, e)
                if pair not in t.role_ext.get(role, frozenset()):
                    ok = False
                    break
            if not ok:
                continue
            assignment[d] = e
            if extend(idx + 1):
                return True
            del assignment[d]
        return False

    if not extend(0):
        logger.debug("no homomorphism found (%d steps)", steps)
        return None
    return MorphismWitness(dict(assignment), MorphismKind.HOMOMORPHISM)


def _assignment_order(i: Interpretation, point: Element) -> List[Element]:
    seen = {point}
    order = [point]
    queue = deque([point])
    neighbours: Dict[Element, set] = {}
    for ext in i.role_ext.values():
        for a, b in ext:
            neighbours.setdefault(a, set()).add(b)
            neighbours.setdefault(b, set()).add(a)
    while queue:
        d = queue.popleft()
        for e in sorted(neighbours.get(d, ())):
            if e not in seen:
                seen.add(e)
                order.append(e)
                queue.append(e)
    order.extend(sorted(i.domain - seen))
    return order


def _edge_constraints(i: Interpretation, order: List[Element]):
    """Per element, the edges to itself or to elements assigned before it."""
    position = {d: n for n, d in enumerate(order)}
    constraints: Dict[Element, list] = {d: [] for d in order}
    for role, ext in i.role_ext.items():
        for a, b in ext:
            if position[b] <= position[a]:
                constraints[a].append((role, b, True))
            else:
                constraints[b].append((role, a, False))
    return constraints
