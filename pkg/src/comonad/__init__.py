"""
The depth-k unravelling comonad: trees, co-Kleisli maps, executable laws
and the back-and-forth game over unravelled reduced images.
"""
from comonad.unravel import UnravelNode, UnravelTree, parse_node_id, render_node_id, tree_violations, unravel
from comonad.kleisli import CoKleisliMap, TreeMap, coextend, cokleisli_compose, counit, lift, tree_map_witness
from comonad.laws import LAWS, LawReport, LawResult, check_comonad_laws, sample_cokleisli
from comonad.wgame import (
    DUPLICATOR,
    SPOILER,
    BackAndForthGame,
    bnf_game,
    unravel_phi,
    w_membership,
    w_membership_literal,
)

__all__ = [
    "UnravelNode", "UnravelTree", "unravel", "render_node_id", "parse_node_id", "tree_violations",
    "CoKleisliMap", "TreeMap", "counit", "lift", "coextend", "cokleisli_compose", "tree_map_witness",
    "LAWS", "LawReport", "LawResult", "check_comonad_laws", "sample_cokleisli",
    "DUPLICATOR", "SPOILER", "BackAndForthGame", "bnf_game", "unravel_phi",
    "w_membership", "w_membership_literal",
]
