"""
The back-and-forth game on unravellings of reduced images.

Both inputs are first reduced to plain ALC by τ_Φ and then unravelled to
depth k. A position is a pair of nodes (s, t). Spoiler picks an immediate
successor of s in the left tree or of t in the right tree; Duplicator
answers with an immediate successor on the other side, and the new pair
must lie in W. Duplicator wins when k rounds pass or Spoiler cannot move.

W holds the pairs hit by a common path through path embeddings. In a tree
order every path embedding lands on a root branch, so W compares branches:
equal length, identical role names and harmonious elements position by
position.
"""
from __future__ import annotations

import logging
from typing import Dict, Iterator, Tuple

from comonad.unravel import UnravelNode, UnravelTree, render_node_id, unravel
from concepts.logic import ALC, LogicSelector
from errors import CrossInstanceError, PreconditionError
from games.harmony import harmony
from games.solver import check_vocabularies
from model.interpretation import Element, Interpretation, PointedInterpretation
from model.morphism import MorphismKind, MorphismWitness, check_morphism
from reductions.compose import tau_phi
from utils.tracing import span

logger = logging.getLogger(__name__)

DUPLICATOR = "duplicator"
SPOILER = "spoiler"
LITERAL_MAX_STEPS = 3


def unravel_phi(p: PointedInterpretation, logic: LogicSelector, k: int) -> UnravelTree:
    """The relative comonad object: unravel the reduced image of p."""
    return unravel(tau_phi(p, logic), k)


class BackAndForthGame:
    def __init__(self, p: PointedInterpretation, q: PointedInterpretation, logic: LogicSelector, k: int):
        check_vocabularies(p, q)
        self.logic = logic
        self.rounds = k
        self.left = unravel_phi(p, logic, k)
        self.right = unravel_phi(q, logic, k)
        self.vocab = self.left.source.vocab
        self._harmony: Dict[Tuple[Element, Element], bool] = {}
        self._survives: Dict[Tuple[UnravelNode, UnravelNode, int], bool] = {}

    def _harmonious(self, a: Element, b: Element) -> bool:
        key = (a, b)
        if key not in self._harmony:
            self._harmony[key] = harmony(a, self.left.source.interp, b, self.right.source.interp,
                                         self.vocab, ALC).verdict
        return self._harmony[key]

    def w(self, s: UnravelNode, t: UnravelNode) -> bool:
        if s not in self.left or t not in self.right:
            raise CrossInstanceError(f"({render_node_id(s)}, {render_node_id(t)}) is not a position of this game")
        if s.depth != t.depth or s.roles != t.roles:
            return False
        return all(self._harmonious(a, b) for a, b in zip(s.elements, t.elements))

    def pairs(self) -> Iterator[Tuple[UnravelNode, UnravelNode]]:
        """Every pair in W."""
        for s in self.left.nodes:
            for t in self.right.nodes:
                if self.w(s, t):
                    yield s, t

    def survives(self, s: UnravelNode, t: UnravelNode, remaining: int) -> bool:
        """Whether Duplicator, at (s, t) in W, lasts `remaining` more rounds."""
        key = (s, t, remaining)
        if key in self._survives:
            return self._survives[key]
        ok = True
        if remaining > 0:
            for s2 in self.left.successors(s):
                if not any(self.w(s2, t2) and self.survives(s2, t2, remaining - 1)
                           for t2 in self.right.successors(t)):
                    ok = False
                    break
            if ok:
                for t2 in self.right.successors(t):
                    if not any(self.w(s2, t2) and self.survives(s2, t2, remaining - 1)
                               for s2 in self.left.successors(s)):
                        ok = False
                        break
        self._survives[key] = ok
        return ok

    def verdict(self) -> str:
        root_l, root_r = self.left.root, self.right.root
        if self.w(root_l, root_r) and self.survives(root_l, root_r, self.rounds):
            return DUPLICATOR
        return SPOILER


def w_membership(game: BackAndForthGame, s: UnravelNode, t: UnravelNode) -> bool:
    return game.w(s, t)


# ── Literal W ────────────────────────────────────────────────────────

def _branch_path(tree: UnravelTree, node: UnravelNode) -> PointedInterpretation:
    """The root branch of `node` as a linear interpretation over p0, p1, ..."""
    prefixes = node.prefixes()
    domain = [f"p{n}" for n in range(len(prefixes))]
    tree_interp = tree.interp
    concepts: Dict[str, set] = {}
    for name, pos in zip(domain, prefixes):
        for c in tree_interp.labels(render_node_id(pos)):
            concepts.setdefault(c, set()).add(name)
    roles: Dict[str, set] = {}
    for n, role in enumerate(node.roles):
        roles.setdefault(role, set()).add((domain[n], domain[n + 1]))
    path = Interpretation.build(domain, {}, concepts, roles, tree_interp.vocab)
    return PointedInterpretation(path, "p0")


def _embeds(path: PointedInterpretation, tree: UnravelTree, branch: UnravelNode) -> bool:
    mapping = {f"p{n}": render_node_id(pos) for n, pos in enumerate(branch.prefixes())}
    return check_morphism(MorphismWitness(mapping, MorphismKind.EMBEDDING), path, tree.as_pointed())


def w_membership_literal(game: BackAndForthGame, s: UnravelNode, t: UnravelNode,
                         max_steps: int = LITERAL_MAX_STEPS) -> bool:
    """W by search: a path P with embeddings into both trees meeting at (s, t).

    Candidate paths are the root branches of the left tree through s, up to
    `max_steps` role steps; each is tried against every right branch of the
    same length through t.
    """
    if s not in game.left or t not in game.right:
        raise CrossInstanceError(f"({render_node_id(s)}, {render_node_id(t)}) is not a position of this game")
    if s.depth > max_steps or t.depth > max_steps:
        raise PreconditionError(f"literal W search is limited to {max_steps} steps")
    if s.depth != t.depth:
        return False
    for b1 in game.left.nodes:
        if b1.depth > max_steps or not s.is_prefix_of(b1):
            continue
        path = _branch_path(game.left, b1)
        if not _embeds(path, game.left, b1):
            continue
        for b2 in game.right.nodes:
            if b2.depth != b1.depth or not t.is_prefix_of(b2):
                continue
            if _embeds(path, game.right, b2):
                return True
    return False


def bnf_game(p: PointedInterpretation, q: PointedInterpretation, logic: LogicSelector, k: int) -> str:
    with span("bnf_game", logic=logic.render(), rounds=k) as sp:
        game = BackAndForthGame(p, q, logic, k)
        result = game.verdict()
        sp.set_attribute("left_nodes", len(game.left))
        sp.set_attribute("right_nodes", len(game.right))
        sp.set_attribute("winner", result)
    logger.debug("bnf_game %s k=%d: %d x %d nodes, %s", logic.render(), k,
                 len(game.left), len(game.right), result)
    return result
