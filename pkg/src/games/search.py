"""
Exhaustive game-tree search, independent of the stratified layers.

`GameSearch` explores every Spoiler move and every harmonious Duplicator
reply. The memoised mode keys positions by the current element pair and
the rounds left; the literal mode carries the full play histories through
the recursion and memoises nothing, which is only feasible on tiny models
but reads the game rules as stated.
"""
from __future__ import annotations

import logging
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

from concepts.logic import LogicSelector
from games.harmony import harmony
from games.moves import Move, moves_from, replies
from games.solver import Rounds, check_vocabularies, is_omega
from games.strategy import Direction, MoveRequest, Side
from model.interpretation import Element, PointedInterpretation

logger = logging.getLogger(__name__)


class GameSearch:
    def __init__(self, p: PointedInterpretation, q: PointedInterpretation, logic: LogicSelector):
        check_vocabularies(p, q)
        self.p = p
        self.q = q
        self.logic = logic
        self.i = p.interp
        self.j = q.interp
        self._wins = lru_cache(maxsize=None)(self._spoiler_wins)

    def omega_horizon(self) -> int:
        return len(self.i.domain) * len(self.j.domain)

    def harmonious(self, a: Element, b: Element) -> bool:
        return harmony(a, self.i, b, self.j, self.p.vocab, self.logic).verdict

    def spoiler_moves(self, a: Element, b: Element) -> Iterator[Tuple[Side, Move]]:
        for mv in moves_from(self.i, a, self.logic):
            yield Side.LEFT, mv
        for mv in moves_from(self.j, b, self.logic):
            yield Side.RIGHT, mv

    def answers(self, a: Element, b: Element, side: Side, mv: Move) -> List[Tuple[Element, Element]]:
        """Positions Duplicator can move to without losing on harmony."""
        if side is Side.LEFT:
            out = [(mv.target, t) for t in replies(self.i, a, mv, self.j, b, self.logic)]
        else:
            out = [(s, mv.target) for s in replies(self.j, b, mv, self.i, a, self.logic)]
        return [pair for pair in out if self.harmonious(*pair)]

    def spoiler_wins(self, a: Element, b: Element, rounds_left: int) -> bool:
        """Whether Spoiler wins from the harmonious position (a, b)."""
        return self._wins(a, b, rounds_left)

    def _spoiler_wins(self, a: Element, b: Element, rounds_left: int) -> bool:
        if rounds_left <= 0:
            return False
        for side, mv in self.spoiler_moves(a, b):
            if all(self._wins(s, t, rounds_left - 1) for s, t in self.answers(a, b, side, mv)):
                return True
        return False

    def winning_move(self, a: Element, b: Element, rounds_left: int) -> Optional[MoveRequest]:
        """A Spoiler move that wins from (a, b), or None."""
        if rounds_left <= 0:
            return None
        for side, mv in self.spoiler_moves(a, b):
            if all(self._wins(s, t, rounds_left - 1) for s, t in self.answers(a, b, side, mv)):
                return _request(side, mv)
        return None

    def first_move(self, a: Element, b: Element) -> Optional[MoveRequest]:
        for side, mv in self.spoiler_moves(a, b):
            return _request(side, mv)
        return None

    def verdict(self, rounds: Rounds) -> str:
        """'duplicator' or 'spoiler' for the game from the points."""
        if not self.harmonious(self.p.point, self.q.point):
            return "spoiler"
        horizon = self.omega_horizon() if is_omega(rounds) else rounds
        won = self.spoiler_wins(self.p.point, self.q.point, horizon)
        return "spoiler" if won else "duplicator"

    # ── Literal history-based search ─────────────────────────────────

    def verdict_by_histories(self, rounds: int) -> str:
        start = ((self.p.point,), (self.q.point,))
        if not self.harmonious(self.p.point, self.q.point):
            return "spoiler"
        return "spoiler" if self._history_wins(start, rounds) else "duplicator"

    def _history_wins(self, histories, rounds_left: int) -> bool:
        left, right = histories
        if rounds_left <= 0:
            return False
        a, b = left[-1], right[-1]
        for side, mv in self.spoiler_moves(a, b):
            won = True
            for s, t in self.answers(a, b, side, mv):
                extended = (left + (mv.label, s), right + (mv.label, t))
                if not self._history_wins(extended, rounds_left - 1):
                    won = False
                    break
            if won:
                return True
        return False


def _request(side: Side, mv: Move) -> MoveRequest:
    direction = Direction.BACKWARD if mv.backward else Direction.FORWARD
    return MoveRequest(side, mv.role, mv.target, direction)


def exhaustive_verdict(p: PointedInterpretation, q: PointedInterpretation,
                       logic: LogicSelector, rounds: Rounds) -> str:
    return GameSearch(p, q, logic).verdict(rounds)
