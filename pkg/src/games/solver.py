"""
Stratified bisimulation solver.

Z_0 holds every harmonious element pair. Z_{i+1} keeps the pairs of Z_i
from which every licensed Spoiler move, played in either interpretation,
has a Duplicator reply landing back in Z_i. Duplicator wins the k-round
game iff the point pair is in Z_k; the unbounded game is decided by the
fixpoint, reached within |Δ^I|·|Δ^J| refinements.

The conditions only ever read the last elements of the two play histories,
so the solver works on element pairs with a round counter.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

from concepts.logic import LogicSelector
from errors import VocabularyMismatchError
from games.harmony import harmony_profile
from games.moves import moves_from, replies
from model.interpretation import Element, Pair, PointedInterpretation
from utils.tracing import span

logger = logging.getLogger(__name__)

OMEGA = "omega"
Rounds = Union[int, str]


def is_omega(rounds: Rounds) -> bool:
    return isinstance(rounds, str) and rounds == OMEGA


def parse_rounds(text: Union[str, int]) -> Rounds:
    if isinstance(text, int):
        if text < 0:
            raise ValueError("rounds must be a natural number or 'omega'")
        return text
    value = text.strip().lower()
    if value in {"omega", "ω", "w"}:
        return OMEGA
    if not value.isdigit():
        raise ValueError(f"rounds must be a natural number or 'omega', got {text!r}")
    return int(value)


def render_rounds(rounds: Rounds) -> str:
    return OMEGA if is_omega(rounds) else str(rounds)


@dataclass(frozen=True)
class StratifiedBisim:
    left: PointedInterpretation
    right: PointedInterpretation
    logic: LogicSelector
    rounds: Rounds
    layers: Tuple[FrozenSet[Pair], ...]

    @property
    def final(self) -> FrozenSet[Pair]:
        return self.layers[-1]

    def layer(self, remaining: Rounds) -> FrozenSet[Pair]:
        """Duplicator's winning pairs with `remaining` rounds still to play."""
        if is_omega(remaining):
            return self.final
        return self.layers[min(remaining, len(self.layers) - 1)]

    def duplicator_wins(self, a: Optional[Element] = None, b: Optional[Element] = None,
                        remaining: Optional[Rounds] = None) -> bool:
        pair = (self.left.point if a is None else a, self.right.point if b is None else b)
        return pair in self.layer(self.rounds if remaining is None else remaining)

    @property
    def winner(self) -> str:
        return "duplicator" if self.duplicator_wins() else "spoiler"

    def distinguishing_round(self) -> Optional[int]:
        """Fewest rounds Spoiler needs to win from the points, or None."""
        pair = (self.left.point, self.right.point)
        for n, layer in enumerate(self.layers):
            if pair not in layer:
                return n
        return None

    def layer_sizes(self) -> List[int]:
        return [len(z) for z in self.layers]


def check_vocabularies(p: PointedInterpretation, q: PointedInterpretation) -> None:
    if p.vocab != q.vocab:
        missing = p.vocab.missing_from(q.vocab) + q.vocab.missing_from(p.vocab)
        shown = ", ".join(f"{kind} {name}" for kind, name in missing[:5])
        raise VocabularyMismatchError(f"vocabularies differ: {shown}")


def _refine(p: PointedInterpretation, q: PointedInterpretation, logic: LogicSelector,
            current: FrozenSet[Pair], moves_i: Dict[Element, list],
            moves_j: Dict[Element, list]) -> FrozenSet[Pair]:
    i, j = p.interp, q.interp
    survivors = []
    for a, b in current:
        ok = all(any((mv.target, t) in current for t in replies(i, a, mv, j, b, logic))
                 for mv in moves_i[a])
        if ok:
            ok = all(any((s, mv.target) in current for s in replies(j, b, mv, i, a, logic))
                     for mv in moves_j[b])
        if ok:
            survivors.append((a, b))
    return frozenset(survivors)


def stratified_bisim(p: PointedInterpretation, q: PointedInterpretation,
                     logic: LogicSelector, rounds: Rounds) -> StratifiedBisim:
    check_vocabularies(p, q)
    if not is_omega(rounds) and rounds < 0:
        raise ValueError("rounds must be a natural number or 'omega'")
    i, j = p.interp, q.interp
    v = p.vocab

    with span("stratified_bisim", logic=logic.render(), rounds=render_rounds(rounds)) as s:
        profiles_j: Dict[tuple, List[Element]] = {}
        for b in j.domain:
            profiles_j.setdefault(harmony_profile(b, j, v, logic), []).append(b)
        z0 = frozenset((a, b) for a in i.domain
                       for b in profiles_j.get(harmony_profile(a, i, v, logic), ()))

        moves_i = {a: moves_from(i, a, logic) for a in i.domain}
        moves_j = {b: moves_from(j, b, logic) for b in j.domain}

        layers = [z0]
        limit = len(i.domain) * len(j.domain) + 1
        while True:
            if not is_omega(rounds) and len(layers) > rounds:
                break
            previous = layers[-1]
            # a stable layer stays stable: reuse it instead of recomputing
            if len(layers) >= 2 and layers[-2] == previous:
                nxt = previous
            else:
                nxt = _refine(p, q, logic, previous, moves_i, moves_j)
            layers.append(nxt)
            if is_omega(rounds) and nxt == previous:
                break
            if is_omega(rounds) and len(layers) > limit + 1:
                raise RuntimeError("refinement failed to stabilize")

        s.set_attribute("iterations", len(layers) - 1)
        logger.debug("stratified_bisim %s rounds=%s layer sizes %s",
                     logic.render(), render_rounds(rounds), [len(z) for z in layers])
    return StratifiedBisim(p, q, logic, rounds, tuple(layers))
