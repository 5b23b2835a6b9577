"""
Tests for the game engine and its Spoiler move sources.
"""
import io
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from concepts import ALC, LogicSelector
from errors import IllegalMoveError
from fixtures import FIXTURES
from games import (
    OMEGA,
    Direction,
    ExhaustiveSpoiler,
    InteractiveSpoiler,
    MoveRequest,
    ScriptedSpoiler,
    Side,
    parse_move,
    run_game,
    stratified_bisim,
)
from strategies import finite_rounds, logics, pointed_pairs


def test_exhaustive_spoiler_wins_the_path_game_in_two_rounds():
    pair = FIXTURES["path"]
    transcript = run_game(pair.left, pair.right, ALC, 2, ExhaustiveSpoiler())
    assert transcript.winner == "spoiler"
    assert len(transcript.moves) == 2
    assert transcript.lines()[-1].startswith("WINNER: spoiler")


def test_disharmonious_start_ends_before_any_move():
    pair = FIXTURES["self-loop"]
    transcript = run_game(pair.left, pair.right, LogicSelector.of("Self"), 0, ExhaustiveSpoiler())
    assert transcript.winner == "spoiler"
    assert transcript.moves == []
    assert transcript.reason.startswith("disharmonious start")


def test_exhausted_script_is_a_duplicator_win():
    pair = FIXTURES["path"]
    transcript = run_game(pair.left, pair.right, ALC, 2, ScriptedSpoiler([]))
    assert transcript.winner == "duplicator"
    assert transcript.reason == "scripted spoiler stopped"


def test_spoiler_without_moves_loses():
    pair = FIXTURES["sink"]
    transcript = run_game(pair.left, pair.right, ALC, OMEGA, ExhaustiveSpoiler())
    assert transcript.winner == "duplicator"
    assert transcript.reason == "spoiler has no move"


def test_illegal_scripted_move_is_rejected():
    pair = FIXTURES["path"]
    with pytest.raises(IllegalMoveError) as info:
        run_game(pair.left, pair.right, ALC, 2, ScriptedSpoiler([MoveRequest(Side.RIGHT, "r", "f2")]))
    assert info.value.index == 0


def test_backward_moves_need_inverse():
    pair = FIXTURES["sink"]
    backward = MoveRequest(Side.LEFT, "r", "d", Direction.BACKWARD)
    with pytest.raises(IllegalMoveError):
        run_game(pair.left, pair.right, ALC, 1, ScriptedSpoiler([backward]))
    transcript = run_game(pair.left, pair.right, LogicSelector.of("I"), 1, ScriptedSpoiler([backward]))
    assert transcript.winner == "spoiler"
    assert "no reply" in transcript.reason


def test_parse_move():
    assert parse_move("left r e1") == MoveRequest(Side.LEFT, "r", "e1")
    assert parse_move("RIGHT s x back") == MoveRequest(Side.RIGHT, "s", "x", Direction.BACKWARD)
    for bad in ("left r", "middle r e", "left r e forward"):
        with pytest.raises(ValueError):
            parse_move(bad)


def test_interactive_spoiler_reprompts_on_illegal_input():
    pair = FIXTURES["path"]
    stdin = io.StringIO("nonsense\nleft r d1\nleft r e1\n")
    stdout = io.StringIO()
    transcript = run_game(pair.left, pair.right, ALC, 1, InteractiveSpoiler(stdin, stdout))
    shown = stdout.getvalue()
    assert shown.count("round 1") == 3
    assert shown.count("illegal move") == 2
    assert transcript.winner == "duplicator"
    assert transcript.lines()[0] == "round 1: SPOILER left r e1 | DUPLICATOR right r e2"


def test_interactive_spoiler_stops_at_end_of_input():
    pair = FIXTURES["path"]
    transcript = run_game(pair.left, pair.right, ALC, 2, InteractiveSpoiler(io.StringIO(""), io.StringIO()))
    assert transcript.winner == "duplicator"
    assert transcript.moves == []


@settings(deadline=None, max_examples=80)
@given(pointed_pairs(max_size=3, max_individuals=1), logics(), finite_rounds(3))
def test_exhaustive_spoiler_matches_the_solver(pair, logic, k):
    p, q = pair
    expected = stratified_bisim(p, q, logic, k).winner
    assert run_game(p, q, logic, k, ExhaustiveSpoiler()).winner == expected


@settings(deadline=None, max_examples=40)
@given(pointed_pairs(max_size=3), logics())
def test_exhaustive_spoiler_matches_the_solver_unbounded(pair, logic):
    p, q = pair
    expected = stratified_bisim(p, q, logic, OMEGA).winner
    assert run_game(p, q, logic, OMEGA, ExhaustiveSpoiler()).winner == expected
