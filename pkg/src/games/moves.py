"""
Move generation shared by the solver, the search oracle and the game engine.

A Spoiler move is a role name, a target element and a direction. Backward
moves exist only under I. Under b, a reply must additionally realize the
same set of role names between the two elements (in both directions when
I is also present).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List

from concepts.logic import LogicSelector
from model.interpretation import Element, Interpretation


@dataclass(frozen=True, order=True)
class Move:
    role: str
    target: Element
    backward: bool = False

    @property
    def label(self) -> str:
        return self.role + ("-" if self.backward else "")


def moves_from(i: Interpretation, a: Element, logic: LogicSelector) -> List[Move]:
    """All moves licensed from `a`, sorted by (role, target, direction)."""
    moves = []
    for role in sorted(r for r in i.role_ext if r in i.vocab.roles):
        moves.extend(Move(role, t) for t in i.successors(role, a))
        if logic.inverse:
            moves.extend(Move(role, t, True) for t in i.predecessors(role, a))
    return sorted(moves)


def is_edge(i: Interpretation, a: Element, move: Move) -> bool:
    pair = (move.target, a) if move.backward else (a, move.target)
    return pair in i.role_ext.get(move.role, ())


def reply_matches(i: Interpretation, a: Element, move: Move,
                  j: Interpretation, b: Element, target: Element,
                  logic: LogicSelector) -> bool:
    """Whether moving from b to `target` in j answers `move` played from a in i."""
    if not is_edge(j, b, Move(move.role, target, move.backward)):
        return False
    if logic.boolean:
        if i.two_type(a, move.target) != j.two_type(b, target):
            return False
        if logic.inverse and i.two_type(move.target, a) != j.two_type(target, b):
            return False
    return True


def replies(i: Interpretation, a: Element, move: Move,
            j: Interpretation, b: Element, logic: LogicSelector) -> List[Element]:
    """Legal reply targets in j, sorted."""
    pool = j.predecessors(move.role, b) if move.backward else j.successors(move.role, b)
    return sorted(t for t in pool if reply_matches(i, a, move, j, b, t, logic))
