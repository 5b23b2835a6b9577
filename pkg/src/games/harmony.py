"""
Harmony: the local agreement two elements need before and after every round.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Tuple

from concepts.logic import LogicSelector
from model.interpretation import Element, Interpretation
from model.vocabulary import Vocabulary


@dataclass(frozen=True)
class HarmonyCheck:
    left: Element
    right: Element
    logic: LogicSelector
    verdict: bool
    failures: Tuple[str, ...] = field(default_factory=tuple)


def harmony(a: Element, i: Interpretation, b: Element, j: Interpretation,
            v: Vocabulary, logic: LogicSelector) -> HarmonyCheck:
    """Compare concept names, plus nominal identity under O and self-loops under Self."""
    failures = []
    for name in sorted(v.concepts):
        if (a in i.concept_ext.get(name, ())) != (b in j.concept_ext.get(name, ())):
            failures.append(f"concept {name} differs")
    if logic.nominals:
        for name in sorted(v.individuals):
            if (i.individual_map.get(name) == a) != (j.individual_map.get(name) == b):
                failures.append(f"nominal {name} differs")
    if logic.self_:
        for name in sorted(v.roles):
            if ((a, a) in i.role_ext.get(name, ())) != ((b, b) in j.role_ext.get(name, ())):
                failures.append(f"self-loop on {name} differs")
    return HarmonyCheck(a, b, logic, not failures, tuple(failures))


def harmony_profile(d: Element, i: Interpretation, v: Vocabulary, logic: LogicSelector) -> tuple:
    """A hashable summary; two elements are in harmony iff their profiles are equal."""
    labels = frozenset(n for n in v.concepts if d in i.concept_ext.get(n, ()))
    names = frozenset(o for o in v.individuals if i.individual_map.get(o) == d) if logic.nominals else frozenset()
    loops = frozenset(r for r in v.roles if (d, d) in i.role_ext.get(r, ())) if logic.self_ else frozenset()
    return labels, names, loops
