"""
Action registry for When clause dispatch.

Each action maps a When clause pattern to a handler that runs one of the
engines on the case's inputs and returns a dict of named results. The
runner merges the dicts of successive stages into a single subject, so a
later check can compare what earlier stages produced.

Action handlers receive:
  - context: the case's given values (fixture, logic, rounds, seed, ...)
  - previous: the merged results of earlier stages (empty for the first)
  - options: the run's SuiteOptions

Usage:
    from suite.actions import action

    @action("the stratified solver decides")
    def solve(context, previous, options):
        ...
        return {"verdict": sb.winner}
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

from comonad.laws import check_comonad_laws
from comonad.unravel import tree_violations, unravel
from comonad.wgame import bnf_game
from concepts.characteristic import characteristic_concept
from concepts.logic import ALC, LogicSelector
from concepts.sampling import ConceptSampler
from concepts.semantics import satisfies
from errors import PreconditionError
from fixtures import FIXTURES, side
from games.engine import ExhaustiveSpoiler, run_game
from games.search import GameSearch
from games.solver import Rounds, is_omega, parse_rounds, render_rounds, stratified_bisim
from model.interpretation import PointedInterpretation
from model.random_models import random_pointed, small_vocabulary
from reductions.compose import tau_phi

logger = logging.getLogger(__name__)

_ACTION_DEFS: list = []  # [(pattern, fn)]


@dataclass
class SuiteOptions:
    samples: int = 200
    seed: int = 7
    law_samples: int = 10


def action(pattern: str):
    """Register an action handler for a When clause pattern."""
    def decorator(fn: Callable) -> Callable:
        _ACTION_DEFS.append((pattern, fn))
        return fn
    return decorator


def match_action(action_text: str) -> Optional[Callable]:
    """Find a matching handler, longest pattern first."""
    if not action_text:
        return None
    matches = [(p, fn) for p, fn in _ACTION_DEFS if action_text.lower().startswith(p.lower())]
    if not matches:
        return None
    return max(matches, key=lambda m: len(m[0]))[1]


# ── Input resolution ─────────────────────────────────────────────────

def random_pair(seed: int, individuals: int = 0, max_size: int = 4) -> Tuple[PointedInterpretation, PointedInterpretation]:
    """Two random pointed interpretations over one small vocabulary."""
    rng = random.Random(seed)
    vocab = small_vocabulary(concepts=2, roles=2, individuals=individuals)
    left = random_pointed(vocab, rng.randint(1, max_size), rng)
    right = random_pointed(vocab, rng.randint(1, max_size), rng)
    return left, right


def resolve_pair(context: dict) -> Tuple[PointedInterpretation, PointedInterpretation]:
    if "fixture" in context:
        pair = FIXTURES[context["fixture"]]
        return pair.left, pair.right
    if "random pair" in context:
        return random_pair(context["random pair"], context.get("individuals", 0), context.get("max size", 4))
    raise PreconditionError("case names neither a fixture nor a random pair")


def resolve_model(context: dict) -> PointedInterpretation:
    if "model" in context:
        return side(context["model"])
    if "random model" in context:
        rng = random.Random(context["random model"])
        return random_pointed(small_vocabulary(2, 2), rng.randint(1, 4), rng)
    raise PreconditionError("case names neither a model nor a random model")


def resolve_logic(context: dict) -> LogicSelector:
    return LogicSelector.parse(context.get("logic", ""))


def resolve_rounds(context: dict) -> Rounds:
    return parse_rounds(context.get("rounds", "omega"))


def depths_up_to(rounds: Rounds) -> List[Rounds]:
    """Every depth from 0 to a finite bound; omega on its own."""
    return [rounds] if is_omega(rounds) else list(range(rounds + 1))


def _record(previous: Dict[str, Any], engine: str, verdict: str) -> Dict[str, Any]:
    verdicts = dict(previous.get("verdicts", {}))
    verdicts[engine] = verdict
    return {"verdict": verdict, "verdicts": verdicts}


def count_paths(p: PointedInterpretation, k: int) -> int:
    """Legal alternating sequences of at most k steps, counted edge by edge."""
    edges = p.interp.edges()

    def count(a, depth: int) -> int:
        if depth == 0:
            return 1
        return 1 + sum(count(b, depth - 1) for _, x, b in edges if x == a)

    return count(p.point, k)


# ── Game actions ─────────────────────────────────────────────────────

@action("the stratified solver decides")
def _stratified(context: dict, previous: dict, options: SuiteOptions) -> dict:
    left, right = resolve_pair(context)
    sb = stratified_bisim(left, right, resolve_logic(context), resolve_rounds(context))
    out = _record(previous, "stratified", sb.winner)
    out["distinguishing_round"] = sb.distinguishing_round()
    return out


@action("the search oracle decides")
def _search(context: dict, previous: dict, options: SuiteOptions) -> dict:
    left, right = resolve_pair(context)
    return _record(previous, "search", GameSearch(left, right, resolve_logic(context)).verdict(resolve_rounds(context)))


@action("the history search decides")
def _histories(context: dict, previous: dict, options: SuiteOptions) -> dict:
    left, right = resolve_pair(context)
    rounds = resolve_rounds(context)
    search = GameSearch(left, right, resolve_logic(context))
    horizon = search.omega_horizon() if is_omega(rounds) else rounds
    return _record(previous, "histories", search.verdict_by_histories(horizon))


@action("the exhaustive spoiler plays")
def _play(context: dict, previous: dict, options: SuiteOptions) -> dict:
    left, right = resolve_pair(context)
    transcript = run_game(left, right, resolve_logic(context), resolve_rounds(context), ExhaustiveSpoiler())
    out = _record(previous, "play", transcript.winner)
    out["transcript"] = transcript.format()
    return out


@action("the reduced images are compared")
def _reduced(context: dict, previous: dict, options: SuiteOptions) -> dict:
    left, right = resolve_pair(context)
    logic = resolve_logic(context)
    sb = stratified_bisim(tau_phi(left, logic), tau_phi(right, logic), ALC, resolve_rounds(context))
    return _record(previous, "reduced", sb.winner)


@action("the back-and-forth game is solved")
def _bnf(context: dict, previous: dict, options: SuiteOptions) -> dict:
    left, right = resolve_pair(context)
    return _record(previous, "bnf", bnf_game(left, right, resolve_logic(context), resolve_rounds(context)))


@action("every logic is compared after reduction")
def _every_reduction(context: dict, previous: dict, options: SuiteOptions) -> dict:
    left, right = resolve_pair(context)
    rounds = resolve_rounds(context)
    mismatches = []
    for logic in LogicSelector.all():
        left_image, right_image = tau_phi(left, logic), tau_phi(right, logic)
        for k in depths_up_to(rounds):
            direct = stratified_bisim(left, right, logic, k).winner
            reduced = stratified_bisim(left_image, right_image, ALC, k).winner
            if direct != reduced:
                mismatches.append(f"{logic.render()} at {render_rounds(k)}: {direct} vs {reduced}")
    return {"mismatches": mismatches}


@action("every logic is compared on unravellings")
def _every_bnf(context: dict, previous: dict, options: SuiteOptions) -> dict:
    left, right = resolve_pair(context)
    rounds = resolve_rounds(context)
    mismatches = []
    for logic in LogicSelector.all():
        for k in depths_up_to(rounds):
            direct = stratified_bisim(left, right, logic, k).winner
            tree = bnf_game(left, right, logic, k)
            if direct != tree:
                mismatches.append(f"{logic.render()} at {k}: {direct} vs {tree}")
    return {"mismatches": mismatches}


# ── Concept actions ──────────────────────────────────────────────────

def with_concept_name(p: PointedInterpretation) -> PointedInterpretation:
    """Characteristic concepts need one concept name; add an empty one if there is none."""
    if p.vocab.concepts:
        return p
    return PointedInterpretation(p.interp.expand(p.vocab.with_concepts(["A"])), p.point)


@action("the characteristic concept is evaluated")
def _characteristic(context: dict, previous: dict, options: SuiteOptions) -> dict:
    left, right = resolve_pair(context)
    left, right = with_concept_name(left), with_concept_name(right)
    rounds = resolve_rounds(context)
    concept = characteristic_concept(left, rounds)
    return {"characteristic": satisfies(right, concept)}


@action("random concepts are sampled")
def _sampled(context: dict, previous: dict, options: SuiteOptions) -> dict:
    left, right = resolve_pair(context)
    left, right = with_concept_name(left), with_concept_name(right)
    logic = resolve_logic(context)
    rounds = resolve_rounds(context)
    sampler = ConceptSampler(left.vocab, logic, seed=options.seed)
    distinguishing = 0
    for _ in range(options.samples):
        c = sampler.concept(rounds, 12)
        if satisfies(left, c) != satisfies(right, c):
            distinguishing += 1
    return {"distinguishing_concepts": distinguishing}


# ── Comonad actions ──────────────────────────────────────────────────

@action("the comonad laws are checked")
def _laws(context: dict, previous: dict, options: SuiteOptions) -> dict:
    p = resolve_model(context)
    report = check_comonad_laws(p, resolve_rounds(context), options.law_samples, options.seed)
    return {"law_report": report}


@action("the model is unravelled")
def _unravel(context: dict, previous: dict, options: SuiteOptions) -> dict:
    p = resolve_model(context)
    rounds = resolve_rounds(context)
    tree = unravel(p, rounds)
    return {"nodes": len(tree), "enumerated": count_paths(p, rounds),
            "tree_violations": tree_violations(tree)}
