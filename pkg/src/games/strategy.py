"""
Game positions, move requests and Duplicator's strategy read off the
stratified layers.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from errors import IllegalMoveError
from games.moves import Move, replies
from games.solver import StratifiedBisim, is_omega
from model.interpretation import Element, PointedInterpretation


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def other(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


class Direction(str, Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


@dataclass(frozen=True)
class MoveRequest:
    side: Side
    role: str
    target: Element
    direction: Direction = Direction.FORWARD

    def __post_init__(self):
        object.__setattr__(self, "side", Side(self.side))
        object.__setattr__(self, "direction", Direction(self.direction))

    @property
    def move(self) -> Move:
        return Move(self.role, self.target, self.direction is Direction.BACKWARD)

    def describe(self) -> str:
        return f"{self.side.value} {self.move.label} {self.target}"


MoveReply = MoveRequest


@dataclass(frozen=True)
class GamePosition:
    """Full play histories: element, role label, element, ...

    Role labels carry a trailing '-' for backward moves.
    """
    left_history: Tuple[str, ...]
    right_history: Tuple[str, ...]

    @classmethod
    def start(cls, p: PointedInterpretation, q: PointedInterpretation) -> "GamePosition":
        return cls((p.point,), (q.point,))

    @property
    def current(self) -> Tuple[Element, Element]:
        return self.left_history[-1], self.right_history[-1]

    @property
    def rounds_played(self) -> int:
        return (len(self.left_history) - 1) // 2

    def extend(self, request: MoveRequest, reply: MoveReply) -> "GamePosition":
        left, right = (request, reply) if request.side is Side.LEFT else (reply, request)
        return GamePosition(self.left_history + (left.move.label, left.target),
                            self.right_history + (right.move.label, right.target))


def check_legal(sb: StratifiedBisim, pos: GamePosition, req: MoveRequest,
                index: Optional[int] = None) -> None:
    """Raise IllegalMoveError unless `req` is a licensed Spoiler move from `pos`."""
    interp = sb.left.interp if req.side is Side.LEFT else sb.right.interp
    here = pos.current[0] if req.side is Side.LEFT else pos.current[1]
    if req.role not in interp.vocab.roles:
        raise IllegalMoveError(f"role {req.role} is not in the vocabulary", index)
    if req.direction is Direction.BACKWARD and not sb.logic.inverse:
        raise IllegalMoveError("backward moves need I in the logic", index)
    if req.target not in interp.domain:
        raise IllegalMoveError(f"unknown element {req.target}", index)
    if req.direction is Direction.BACKWARD:
        legal = req.target in interp.predecessors(req.role, here)
    else:
        legal = req.target in interp.successors(req.role, here)
    if not legal:
        kind = "predecessor" if req.direction is Direction.BACKWARD else "successor"
        raise IllegalMoveError(f"{req.target} is not an {req.role}-{kind} of {here}", index)


def duplicator_strategy(sb: StratifiedBisim, pos: GamePosition,
                        req: MoveRequest) -> Optional[MoveReply]:
    """The smallest reply landing in the next layer, or None when Spoiler's move wins."""
    check_legal(sb, pos, req)
    if is_omega(sb.rounds):
        target_layer = sb.final
    else:
        remaining = sb.rounds - pos.rounds_played
        if remaining <= 0:
            raise IllegalMoveError("no rounds remain")
        target_layer = sb.layer(remaining - 1)

    a, b = pos.current
    if req.side is Side.LEFT:
        for t in replies(sb.left.interp, a, req.move, sb.right.interp, b, sb.logic):
            if (req.target, t) in target_layer:
                return MoveRequest(Side.RIGHT, req.role, t, req.direction)
    else:
        for s in replies(sb.right.interp, b, req.move, sb.left.interp, a, sb.logic):
            if (s, req.target) in target_layer:
                return MoveRequest(Side.LEFT, req.role, s, req.direction)
    return None
