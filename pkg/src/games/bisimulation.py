"""
Checking a supplied relation against the bisimulation conditions.

A relation Z between the domains of two pointed interpretations is a
bisimulation for a logic when it contains the point pair and every pair
in it is harmonious (with nominal and self-loop clauses under O and Self),
satisfies forth and back for every role, satisfies them for inverse moves
under I, and under b has its replies match the full set of connecting
roles.
"""
from __future__ import annotations

from typing import Iterable, List

from concepts.logic import LogicSelector
from games.harmony import harmony
from games.moves import moves_from, replies
from model.interpretation import Pair, PointedInterpretation


def check_bisimulation(relation: Iterable[Pair], p: PointedInterpretation,
                       q: PointedInterpretation, logic: LogicSelector) -> List[str]:
    """Return the violated conditions, one message each; empty when Z is a bisimulation."""
    z = frozenset(relation)
    i, j = p.interp, q.interp
    problems: List[str] = []
    if (p.point, q.point) not in z:
        problems.append(f"point pair ({p.point}, {q.point}) is not related")

    for a, b in sorted(z):
        if a not in i.domain or b not in j.domain:
            problems.append(f"pair ({a}, {b}) mentions unknown elements")
            continue
        check = harmony(a, i, b, j, p.vocab, logic)
        for failure in check.failures:
            problems.append(f"harmony: pair ({a}, {b}): {failure}")

        for mv in moves_from(i, a, logic):
            if not any((mv.target, t) in z for t in replies(i, a, mv, j, b, logic)):
                kind = "inverse forth" if mv.backward else "forth"
                problems.append(f"{kind}: pair ({a}, {b}): move {mv.label} to {mv.target} is unanswered")
        for mv in moves_from(j, b, logic):
            if not any((s, mv.target) in z for s in replies(j, b, mv, i, a, logic)):
                kind = "inverse back" if mv.backward else "back"
                problems.append(f"{kind}: pair ({a}, {b}): move {mv.label} to {mv.target} is unanswered")
    return problems


def is_bisimulation(relation: Iterable[Pair], p: PointedInterpretation,
                    q: PointedInterpretation, logic: LogicSelector) -> bool:
    return not check_bisimulation(relation, p, q, logic)
