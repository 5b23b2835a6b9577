"""
Rank-k characteristic concepts for plain ALC.

X^0(d) is the literal profile of d over the concept names. For j >= 1,
X^j(d) adds, for each role r, one conjunct exists r . X^{j-1}(d') per
r-successor d' and the closing conjunct
!exists r . !(X^{j-1}(d'_1) or ... or X^{j-1}(d'_n)).
A pointed interpretation q satisfies X^k(p) exactly when Duplicator wins
the k-round ALC game on (p; q).
"""
from __future__ import annotations

from typing import Dict, List, Tuple

from concepts.ast import Atomic, Concept, Exists, Name, Not, conjunction, disjunction
from errors import PreconditionError
from model.interpretation import Element, Interpretation, PointedInterpretation


class CharacteristicBuilder:
    """Builds X^j(d) for one interpretation, sharing subconcepts per (element, depth)."""

    def __init__(self, interp: Interpretation):
        if not interp.vocab.concepts:
            raise PreconditionError("characteristic concepts need at least one concept name")
        self.interp = interp
        self.concept_names = sorted(interp.vocab.concepts)
        self.roles = sorted(interp.vocab.roles)
        self.falsum_name = self.concept_names[0]
        self._memo: Dict[Tuple[Element, int], Concept] = {}

    def profile(self, d: Element) -> List[Concept]:
        labels = self.interp.labels(d)
        return [Name(a) if a in labels else Not(Name(a)) for a in self.concept_names]

    def build(self, d: Element, depth: int) -> Concept:
        key = (d, depth)
        if key in self._memo:
            return self._memo[key]
        parts = self.profile(d)
        if depth > 0:
            for r in self.roles:
                successors = sorted(self.interp.successors(r, d))
                children = [self.build(e, depth - 1) for e in successors]
                parts.extend(Exists(Atomic(r), child) for child in children)
                covered = disjunction(children, self.falsum_name)
                parts.append(Not(Exists(Atomic(r), Not(covered))))
        concept = conjunction(parts, self.falsum_name)
        self._memo[key] = concept
        return concept


def characteristic_concept(p: PointedInterpretation, k: int) -> Concept:
    if k < 0:
        raise PreconditionError("rank must be a natural number")
    return CharacteristicBuilder(p.interp).build(p.point, k)
