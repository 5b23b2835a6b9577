"""
Round-by-round game engine.

Spoiler's moves come from a MoveSource; Duplicator answers from the
stratified layers and, when no winning reply exists, with the smallest
legal reply so the play can continue. After every reply the new pair must
be in harmony, otherwise Spoiler wins on the spot.
"""
from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import IO, List, Optional, Sequence, Tuple

from concepts.logic import LogicSelector
from errors import IllegalMoveError
from games.harmony import harmony
from games.moves import replies
from games.search import GameSearch
from games.solver import Rounds, StratifiedBisim, is_omega, render_rounds, stratified_bisim
from games.strategy import (
    Direction,
    GamePosition,
    MoveReply,
    MoveRequest,
    Side,
    check_legal,
    duplicator_strategy,
)
from model.interpretation import PointedInterpretation

logger = logging.getLogger(__name__)


@dataclass
class GameContext:
    """What a move source may look at before choosing a move."""
    left: PointedInterpretation
    right: PointedInterpretation
    logic: LogicSelector
    round_index: int
    rounds_left: int


# ── Move sources ─────────────────────────────────────────────────────

class MoveSource(ABC):
    """Abstract base class for Spoiler move sources."""

    @abstractmethod
    def next_move(self, position: GamePosition, context: GameContext) -> Optional[MoveRequest]:
        """Return Spoiler's next move, or None to stop playing."""
        pass

    @property
    @abstractmethod
    def name(self) -> str:
        """Return the name of the move source."""
        pass


class ScriptedSpoiler(MoveSource):
    """Plays a fixed list of moves; an exhausted script ends the game."""

    def __init__(self, moves: Sequence[MoveRequest]):
        self.moves = list(moves)
        self._next = 0

    @property
    def name(self) -> str:
        return "scripted"

    def next_move(self, position, context):
        if self._next >= len(self.moves):
            return None
        move = self.moves[self._next]
        self._next += 1
        return move


class ExhaustiveSpoiler(MoveSource):
    """Plays a winning move whenever one exists, found by exhaustive search."""

    def __init__(self):
        self._search: Optional[GameSearch] = None

    @property
    def name(self) -> str:
        return "exhaustive"

    def next_move(self, position, context):
        if self._search is None or self._search.p is not context.left or self._search.q is not context.right:
            self._search = GameSearch(context.left, context.right, context.logic)
        a, b = position.current
        move = self._search.winning_move(a, b, context.rounds_left)
        return move if move is not None else self._search.first_move(a, b)


class InteractiveSpoiler(MoveSource):
    """Reads moves from a text stream: `side role target [back]`.

    Illegal or malformed input is reported and the prompt repeated;
    end of input or `quit` ends the game.
    """

    PROMPT = "round {i} — your move (side role target [back]): "

    def __init__(self, stdin: IO[str], stdout: IO[str]):
        self.stdin = stdin
        self.stdout = stdout

    @property
    def name(self) -> str:
        return "interactive"

    def next_move(self, position, context):
        lookahead = StratifiedBisim(context.left, context.right, context.logic,
                                    context.rounds_left, ())
        while True:
            self.stdout.write(self.PROMPT.format(i=context.round_index))
            self.stdout.flush()
            line = self.stdin.readline()
            if not line:
                self.stdout.write("\n")
                return None
            text = line.strip()
            if text in {"quit", "pass", "q"}:
                return None
            try:
                request = parse_move(text)
                check_legal(lookahead, position, request)
                return request
            except (ValueError, IllegalMoveError) as e:
                self.stdout.write(f"illegal move: {e}\n")


def parse_move(text: str) -> MoveRequest:
    parts = text.split()
    if len(parts) not in (3, 4) or (len(parts) == 4 and parts[3] != "back"):
        raise ValueError("expected: side role target [back]")
    side = parts[0].lower()
    if side not in ("left", "right"):
        raise ValueError("side must be left or right")
    direction = Direction.BACKWARD if len(parts) == 4 else Direction.FORWARD
    return MoveRequest(Side(side), parts[1], parts[2], direction)


# ── Transcript ───────────────────────────────────────────────────────

@dataclass
class Transcript:
    winner: str
    reason: str
    rounds: Rounds
    logic: LogicSelector
    moves: List[Tuple[int, MoveRequest, Optional[MoveReply]]] = field(default_factory=list)
    position: Optional[GamePosition] = None

    def lines(self) -> List[str]:
        out = []
        for n, request, reply in self.moves:
            spoiler = f"SPOILER {request.side.value} {request.move.label} {request.target}"
            if reply is None:
                duplicator = "DUPLICATOR none"
            else:
                duplicator = f"DUPLICATOR {reply.side.value} {reply.move.label} {reply.target}"
            out.append(f"round {n}: {spoiler} | {duplicator}")
        out.append(f"WINNER: {self.winner} ({self.reason})")
        return out

    def format(self) -> str:
        return "\n".join(self.lines())


# ── Engine ───────────────────────────────────────────────────────────

def run_game(p: PointedInterpretation, q: PointedInterpretation, logic: LogicSelector,
             rounds: Rounds, spoiler: MoveSource,
             sb: Optional[StratifiedBisim] = None) -> Transcript:
    """Play one game and return its transcript.

    An unbounded game is played for |Δ^I|·|Δ^J| + 1 rounds, enough for
    Spoiler to exhibit any difference.
    """
    sb = sb or stratified_bisim(p, q, logic, rounds)
    total = len(p.domain) * len(q.domain) + 1 if is_omega(rounds) else rounds
    position = GamePosition.start(p, q)
    transcript = Transcript("duplicator", "", rounds, logic, position=position)

    start = harmony(p.point, p.interp, q.point, q.interp, p.vocab, logic)
    if not start.verdict:
        transcript.winner = "spoiler"
        transcript.reason = f"disharmonious start: {start.failures[0]}"
        return transcript

    for n in range(1, total + 1):
        context = GameContext(p, q, logic, n, total - n + 1)
        request = spoiler.next_move(position, context)
        if request is None:
            transcript.reason = _stop_reason(sb, position, spoiler)
            return transcript
        check_legal(sb, position, request, index=n - 1)

        reply = _duplicator_reply(sb, position, request)
        transcript.moves.append((n, request, reply))
        logger.debug("round %d: %s -> %s", n, request.describe(),
                     reply.describe() if reply else "none")
        if reply is None:
            transcript.winner = "spoiler"
            transcript.reason = f"no reply to {request.describe()} in round {n}"
            return transcript
        position = position.extend(request, reply)
        transcript.position = position
        a, b = position.current
        check = harmony(a, p.interp, b, q.interp, p.vocab, logic)
        if not check.verdict:
            transcript.winner = "spoiler"
            transcript.reason = f"disharmony after round {n}: {check.failures[0]}"
            return transcript

    transcript.reason = f"survived {render_rounds(rounds)} rounds"
    return transcript


def _duplicator_reply(sb: StratifiedBisim, position: GamePosition,
                      request: MoveRequest) -> Optional[MoveReply]:
    if is_omega(sb.rounds) or position.rounds_played < sb.rounds:
        best = duplicator_strategy(sb, position, request)
        if best is not None:
            return best
    a, b = position.current
    if request.side is Side.LEFT:
        options = replies(sb.left.interp, a, request.move, sb.right.interp, b, sb.logic)
    else:
        options = replies(sb.right.interp, b, request.move, sb.left.interp, a, sb.logic)
    if not options:
        return None
    return MoveRequest(request.side.other, request.role, options[0], request.direction)


def _stop_reason(sb: StratifiedBisim, position: GamePosition, spoiler: MoveSource) -> str:
    a, b = position.current
    search = GameSearch(sb.left, sb.right, sb.logic)
    if search.first_move(a, b) is None:
        return "spoiler has no move"
    return f"{spoiler.name} spoiler stopped"
