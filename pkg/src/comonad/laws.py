"""
Executable comonad laws for the unravelling.

Laws are checked extensionally on sampled co-Kleisli maps:

    A  ε* = id
    B  ε ∘ f* = f
    C  (g ∘ f*)* = g* ∘ f*

together with the functor laws for lift, naturality of the counit and the
closure of homomorphisms under coextension. A sample whose random target
admits no homomorphism is skipped and counted, never fabricated.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from comonad.kleisli import (
    CoKleisliMap,
    TreeMap,
    coextend,
    cokleisli_compose,
    counit,
    lift,
    tree_map_witness,
)
from comonad.unravel import UnravelTree, render_node_id, unravel
from errors import DLGamesError
from model.interpretation import PointedInterpretation
from model.morphism import check_morphism, compose, find_homomorphism, identity_witness
from model.random_models import perturbed_copy, random_pointed
from utils.tracing import span

logger = logging.getLogger(__name__)

Coextension = Callable[[CoKleisliMap], TreeMap]

LAWS = {
    "A": "counit coextends to the identity",
    "B": "counit after coextension recovers the map",
    "C": "coextension of a co-Kleisli composite",
    "functor-identity": "lift of the identity is the identity",
    "functor-composition": "lift preserves composition",
    "naturality": "counit is natural",
    "D": "coextension of a homomorphism is a tree homomorphism",
}


@dataclass
class LawResult:
    name: str
    description: str
    checked: int = 0
    passed: int = 0
    counterexample: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.checked == self.passed

    def record(self, problem: Optional[str]) -> None:
        self.checked += 1
        if problem is None:
            self.passed += 1
        elif self.counterexample is None:
            self.counterexample = problem


@dataclass
class LawReport:
    depth: int
    samples: int
    seed: Optional[int]
    skipped: int = 0
    laws: Dict[str, LawResult] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.laws.values())

    def failures(self) -> List[LawResult]:
        return [r for r in self.laws.values() if not r.ok]

    def lines(self) -> List[str]:
        out = [f"depth={self.depth} samples={self.samples} seed={self.seed} skipped={self.skipped}"]
        for r in self.laws.values():
            status = "pass" if r.ok else "FAIL"
            out.append(f"law {r.name} ({r.description}): {r.passed}/{r.checked} {status}")
            if r.counterexample:
                out.append(f"  counterexample: {r.counterexample}")
        return out

    def format(self) -> str:
        return "\n".join(self.lines())


# ── Individual law checks ────────────────────────────────────────────
# Each returns None on success or a counterexample description.

def _diff(left: TreeMap, right: TreeMap) -> Optional[str]:
    for node in sorted(left):
        a, b = left[node], right.get(node)
        if a != b:
            shown = render_node_id(b) if b is not None else "nothing"
            return f"{render_node_id(node)} maps to {render_node_id(a)} vs {shown}"
    return None


def law_counit_identity(t: UnravelTree, coextension: Coextension) -> Optional[str]:
    return _diff(coextension(counit(t)), {n: n for n in t.nodes})


def law_counit_after(f: CoKleisliMap, coextension: Coextension) -> Optional[str]:
    star = coextension(f)
    for n in f.source.nodes:
        if star[n].last != f.mapping[n]:
            return f"{render_node_id(n)}: last of f* is {star[n].last}, f gives {f.mapping[n]}"
    return None


def law_composite(g: CoKleisliMap, f: CoKleisliMap, coextension: Coextension) -> Optional[str]:
    left = coextension(cokleisli_compose(g, f, coextension=coextension))
    g_star, f_star = coextension(g), coextension(f)
    right = {n: g_star[f_star[n]] for n in f.source.nodes}
    return _diff(left, right)


def law_closure(f: CoKleisliMap, target_tree: UnravelTree, coextension: Coextension) -> Optional[str]:
    star = coextension(f)
    if not check_morphism(tree_map_witness(star), f.source.as_pointed(), target_tree.as_pointed()):
        return f"coextension out of {render_node_id(f.source.root)} is not a homomorphism"
    return None


def _guard(check: Callable[[], Optional[str]]) -> Optional[str]:
    try:
        return check()
    except (DLGamesError, KeyError) as e:
        return f"{type(e).__name__}: {e}"


# ── Sampling ─────────────────────────────────────────────────────────

def _target(p: PointedInterpretation, index: int, rng: random.Random) -> PointedInterpretation:
    """Even samples extend p; odd samples draw a fresh small model over the same vocabulary."""
    if index % 2 == 0:
        return perturbed_copy(p, rng)
    return random_pointed(p.vocab, rng.randint(1, 3), rng)


def sample_cokleisli(t: UnravelTree, q: PointedInterpretation,
                     rng: random.Random) -> Optional[CoKleisliMap]:
    found = find_homomorphism(t.as_pointed(), q, rng=rng)
    if found is None:
        return None
    by_id = {render_node_id(n): n for n in t.nodes}
    return CoKleisliMap(t, q, {by_id[x]: e for x, e in found.mapping.items()})


def check_comonad_laws(p: PointedInterpretation, k: int, samples: int = 25,
                       seed: Optional[int] = None,
                       coextension: Optional[Coextension] = None) -> LawReport:
    coextension = coextension or coextend
    rng = random.Random(seed)
    report = LawReport(k, samples, seed)
    report.laws = {name: LawResult(name, text) for name, text in LAWS.items()}
    laws = report.laws

    with span("check_comonad_laws", depth=k, samples=samples) as s:
        tree_p = unravel(p, k)
        laws["A"].record(_guard(lambda: law_counit_identity(tree_p, coextension)))
        laws["functor-identity"].record(_guard(
            lambda: _diff(lift(identity_witness(p), p, p, k), {n: n for n in tree_p.nodes})))

        for index in range(samples):
            q = _target(p, index, rng)
            f = sample_cokleisli(tree_p, q, rng)
            h = find_homomorphism(p, q, rng=rng)
            if f is None or h is None:
                report.skipped += 1
                continue
            tree_q = unravel(q, k)
            r = perturbed_copy(q, rng)
            g = sample_cokleisli(tree_q, r, rng)
            h2 = find_homomorphism(q, r, rng=rng)
            if g is None or h2 is None:
                report.skipped += 1
                continue

            laws["B"].record(_guard(lambda: law_counit_after(f, coextension)))
            laws["C"].record(_guard(lambda: law_composite(g, f, coextension)))
            laws["D"].record(_guard(lambda: law_closure(f, tree_q, coextension)))

            lifted = lift(h, p, q, k)
            laws["naturality"].record(next(
                (f"{render_node_id(n)}: ε gives {lifted[n].last}, h gives {h(n.last)}"
                 for n in tree_p.nodes if lifted[n].last != h(n.last)), None))
            second = lift(h2, q, r, k)
            laws["functor-composition"].record(_guard(
                lambda: _diff(lift(compose(h2, h), p, r, k), {n: second[lifted[n]] for n in tree_p.nodes})))

        s.set_attribute("skipped", report.skipped)
        s.set_attribute("passed", report.passed)
    logger.info("comonad laws depth %d: %d samples, %d skipped, %s", k, samples, report.skipped,
                "pass" if report.passed else "fail")
    return report
