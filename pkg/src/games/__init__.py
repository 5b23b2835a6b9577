"""
Bisimulation games: harmony, the stratified solver, relation checking,
Duplicator's strategy, an exhaustive search oracle and the game engine.
"""
from games.harmony import HarmonyCheck, harmony, harmony_profile
from games.moves import Move, moves_from, replies
from games.solver import (
    OMEGA,
    Rounds,
    StratifiedBisim,
    is_omega,
    parse_rounds,
    render_rounds,
    stratified_bisim,
)
from games.bisimulation import check_bisimulation, is_bisimulation
from games.strategy import Direction, GamePosition, MoveReply, MoveRequest, Side, duplicator_strategy
from games.search import GameSearch, exhaustive_verdict
from games.engine import (
    ExhaustiveSpoiler,
    GameContext,
    InteractiveSpoiler,
    MoveSource,
    ScriptedSpoiler,
    Transcript,
    parse_move,
    run_game,
)

__all__ = [
    "HarmonyCheck", "harmony", "harmony_profile",
    "Move", "moves_from", "replies",
    "OMEGA", "Rounds", "StratifiedBisim", "is_omega", "parse_rounds", "render_rounds",
    "stratified_bisim",
    "check_bisimulation", "is_bisimulation",
    "Direction", "GamePosition", "MoveReply", "MoveRequest", "Side", "duplicator_strategy",
    "GameSearch", "exhaustive_verdict",
    "ExhaustiveSpoiler", "GameContext", "InteractiveSpoiler", "MoveSource", "ScriptedSpoiler",
    "Transcript", "parse_move", "run_game",
]
