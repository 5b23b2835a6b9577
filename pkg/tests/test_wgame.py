"""
Tests for the back-and-forth game over unravelled reduced images.
"""
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from comonad import BackAndForthGame, UnravelNode, bnf_game, unravel_phi, w_membership, w_membership_literal
from concepts import ALC, FULL, LogicSelector
from errors import CrossInstanceError, PreconditionError, UnboundedDepthError
from fixtures import FIXTURES, side
from games import OMEGA, stratified_bisim
from strategies import finite_rounds, pointed_pairs


def test_path_game_needs_two_rounds():
    pair = FIXTURES["path"]
    assert bnf_game(pair.left, pair.right, ALC, 1) == "duplicator"
    assert bnf_game(pair.left, pair.right, ALC, 2) == "spoiler"


@pytest.mark.parametrize("name", sorted(FIXTURES))
@pytest.mark.parametrize("selector", LogicSelector.all(), ids=lambda s: s.render())
def test_fixtures_agree_with_the_solver(name, selector):
    pair = FIXTURES[name]
    for k in range(4):
        expected = stratified_bisim(pair.left, pair.right, selector, k).winner
        assert bnf_game(pair.left, pair.right, selector, k) == expected


def test_reduced_image_is_unravelled():
    t = unravel_phi(side("self-loop"), LogicSelector.of("Self"), 1)
    assert "@self:r" in t.interp.vocab.concepts
    assert t.interp.concept("@self:r") == frozenset({"d", "d/r/d"})


def test_w_compares_root_branches():
    game = BackAndForthGame(side("self-loop"), side("2-cycle"), ALC, 2)
    loop1 = UnravelNode(("d", "r", "d"))
    cycle1 = UnravelNode(("x", "r", "y"))
    assert game.w(game.left.root, game.right.root)
    assert game.w(loop1, cycle1)
    assert not game.w(game.left.root, cycle1)
    assert w_membership(game, loop1, cycle1)
    assert len(list(game.pairs())) == 3


def test_w_rejects_foreign_nodes():
    game = BackAndForthGame(side("path1"), side("path2"), ALC, 1)
    with pytest.raises(CrossInstanceError):
        game.w(UnravelNode(("x",)), game.right.root)
    with pytest.raises(CrossInstanceError):
        w_membership_literal(game, game.left.root, UnravelNode(("d1",)))


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_literal_w_agrees_with_the_branch_comparison(name):
    pair = FIXTURES[name]
    game = BackAndForthGame(pair.left, pair.right, ALC, 2)
    for s in game.left.nodes:
        for t in game.right.nodes:
            assert w_membership_literal(game, s, t) == game.w(s, t)


def test_literal_w_is_bounded():
    game = BackAndForthGame(side("self-loop"), side("2-cycle"), ALC, 4)
    deep_left = max(game.left.nodes, key=lambda n: n.depth)
    deep_right = max(game.right.nodes, key=lambda n: n.depth)
    with pytest.raises(PreconditionError):
        w_membership_literal(game, deep_left, deep_right)
    assert w_membership_literal(game, deep_left, deep_right, max_steps=4)


def test_game_needs_a_finite_depth():
    with pytest.raises(UnboundedDepthError):
        bnf_game(side("path1"), side("path2"), ALC, OMEGA)


def test_self_comparison_under_every_extension():
    p = side("nominal-unnamed")
    assert bnf_game(p, p, FULL, 2) == "duplicator"


@settings(deadline=None, max_examples=100)
@given(pointed_pairs(max_size=3, max_individuals=1), finite_rounds(3))
def test_bnf_game_matches_the_solver(pair, k):
    p, q = pair
    for logic in LogicSelector.all():
        assert bnf_game(p, q, logic, k) == stratified_bisim(p, q, logic, k).winner, logic.render()
