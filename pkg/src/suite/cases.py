"""
Built-in property cases.

Fixture cases pin exact verdicts; random cases draw small pairs from fixed
seeds and assert that independent engines agree. Import this module to
register every case before running the suite.

Categories:
  - ladder: each fixture apart exactly when its extension is on
  - triad: game, solver and concepts agree for plain ALC
  - reductions: games on the originals match ALC games on reduced images
  - wgame: the back-and-forth game on unravellings matches the solver
  - comonad: unravelling shape and the comonad laws
"""
import random

from suite.dsl import case, template

RANDOM_PAIRS = list(range(100))
REDUCTION_PAIRS = list(range(200))
RANDOM_MODELS = list(range(100))


def _rounds_for(seed: int, top: int = 3) -> int:
    return random.Random(seed).randint(0, top)


# ═══════════════════════════════════════════════════════════════════════
# Fixture ladder
# ═══════════════════════════════════════════════════════════════════════

@template("fixture ladder", category="ladder")
def ladder(s, data):
    s.given("fixture", data["fixture"])
    s.given("logic", data["logic"])
    s.given("rounds", data["rounds"])

    s.when("the stratified solver decides")
    s.then("the verdict should be", data["expected"])
    s.then("the span should be recorded", "stratified_bisim")

    s.when("the search oracle decides")
    s.then("the verdict should be", data["expected"])

    s.when("the exhaustive spoiler plays")
    s.then("the verdict should be", data["expected"])
    s.then("the verdicts should agree")


ladder.cases([
    {"id": "self-loop plain omega", "fixture": "self-loop", "logic": "", "rounds": "omega", "expected": "duplicator"},
    {"id": "self-loop Self 0", "fixture": "self-loop", "logic": "Self", "rounds": 0, "expected": "spoiler"},
    {"id": "sink plain omega", "fixture": "sink", "logic": "", "rounds": "omega", "expected": "duplicator"},
    {"id": "sink I 1", "fixture": "sink", "logic": "I", "rounds": 1, "expected": "spoiler"},
    {"id": "2-type plain omega", "fixture": "2-type", "logic": "", "rounds": "omega", "expected": "duplicator"},
    {"id": "2-type b 1", "fixture": "2-type", "logic": "b", "rounds": 1, "expected": "spoiler"},
    {"id": "nominal O 1", "fixture": "nominal", "logic": "O", "rounds": 1, "expected": "spoiler"},
    {"id": "nominal plain omega", "fixture": "nominal", "logic": "", "rounds": "omega", "expected": "duplicator"},
    {"id": "path plain 1", "fixture": "path", "logic": "", "rounds": 1, "expected": "duplicator"},
])


@case("path fixture apart at the second round", category="ladder")
def path_distinguishing_round(s):
    s.given("fixture", "path")
    s.given("logic", "")
    s.given("rounds", 2)
    s.when("the stratified solver decides")
    s.then("the verdict should be", "spoiler")
    s.then("the distinguishing round should be", 2)
    s.when("the history search decides")
    s.then("the verdicts should agree")


# ═══════════════════════════════════════════════════════════════════════
# Game / relation / concept triad (plain ALC)
# ═══════════════════════════════════════════════════════════════════════

@template("triad", category="triad")
def triad(s, data):
    for key in ("fixture", "random pair", "max size"):
        if key in data:
            s.given(key, data[key])
    s.given("logic", "")
    s.given("rounds", data["rounds"])

    s.when("the stratified solver decides")
    s.when("the exhaustive spoiler plays")
    s.when("the search oracle decides")
    s.when("the history search decides")
    s.then("the verdicts should agree")

    s.when("the characteristic concept is evaluated")
    s.then("the characteristic concept should match the verdict")
    s.when("random concepts are sampled")
    s.then("sampled concepts should respect the verdict")
    if data.get("expected") == "spoiler":
        s.then("some concept should separate the pair")


triad.cases(
    [{"id": f"{name} at 2", "fixture": name, "rounds": 2} for name in ("self-loop", "sink", "2-type", "nominal")]
    + [{"id": "path at 2", "fixture": "path", "rounds": 2, "expected": "spoiler"}]
    + [{"id": f"random {seed}", "random pair": seed, "rounds": _rounds_for(seed)} for seed in RANDOM_PAIRS]
)


# ═══════════════════════════════════════════════════════════════════════
# Reductions
# ═══════════════════════════════════════════════════════════════════════

@template("reduction", category="reductions")
def reduction(s, data):
    for key in ("fixture", "random pair", "max size"):
        if key in data:
            s.given(key, data[key])
    s.given("individuals", data.get("individuals", 0))
    s.given("rounds", data["rounds"])
    if "logic" in data:
        s.given("logic", data["logic"])
        s.when("the stratified solver decides")
        s.when("the reduced images are compared")
        s.then("the verdict should be", data["expected"])
        s.then("the verdicts should agree")
        s.then("the span should be recorded", "tau_phi")
    s.when("every logic is compared after reduction")
    s.then("no logic should disagree")


reduction.cases(
    [
        {"id": "self-loop Self", "fixture": "self-loop", "logic": "Self", "rounds": 0, "expected": "spoiler"},
        {"id": "sink I", "fixture": "sink", "logic": "I", "rounds": 1, "expected": "spoiler"},
        {"id": "2-type b", "fixture": "2-type", "logic": "b", "rounds": 1, "expected": "spoiler"},
        {"id": "nominal O", "fixture": "nominal", "logic": "O", "rounds": 1, "expected": "spoiler"},
        {"id": "path plain", "fixture": "path", "logic": "", "rounds": 2, "expected": "spoiler"},
    ]
    + [{"id": f"random {seed}", "random pair": seed, "individuals": 1, "max size": 5, "rounds": 3}
       for seed in REDUCTION_PAIRS]
)


# ═══════════════════════════════════════════════════════════════════════
# Back-and-forth game on unravellings
# ═══════════════════════════════════════════════════════════════════════

@template("unravelled game", category="wgame")
def unravelled_game(s, data):
    for key in ("fixture", "random pair", "max size"):
        if key in data:
            s.given(key, data[key])
    s.given("rounds", data["rounds"])
    s.when("every logic is compared on unravellings")
    s.then("no logic should disagree")


unravelled_game.cases(
    [{"id": f"{name} at 2", "fixture": name, "rounds": 2}
     for name in ("path", "self-loop", "sink", "2-type", "nominal")]
    + [{"id": f"random {seed}", "random pair": seed, "max size": 3, "rounds": 3}
       for seed in RANDOM_PAIRS]
)


@case("path fixture on unravellings", category="wgame")
def path_unravelled(s):
    s.given("fixture", "path")
    s.given("logic", "")
    s.given("rounds", 2)
    s.when("the back-and-forth game is solved")
    s.then("the verdict should be", "spoiler")
    s.then("the span should be recorded", "bnf_game")
    s.when("the stratified solver decides")
    s.then("the verdicts should agree")


@case("self-loop against 2-cycle with Self on unravellings", category="wgame")
def self_loop_unravelled(s):
    s.given("fixture", "self-loop")
    s.given("logic", "Self")
    s.given("rounds", 1)
    s.when("the back-and-forth game is solved")
    s.then("the verdict should be", "spoiler")


# ═══════════════════════════════════════════════════════════════════════
# Comonad
# ═══════════════════════════════════════════════════════════════════════

@template("unravelling", category="comonad")
def unravelling(s, data):
    for key in ("model", "random model"):
        if key in data:
            s.given(key, data[key])
    s.given("rounds", data["rounds"])
    s.when("the model is unravelled")
    if "nodes" in data:
        s.then("the node count should be", data["nodes"])
    s.then("the node count should match the enumeration")
    s.then("the tree should satisfy its invariants")


unravelling.cases(
    [
        {"id": "2-cycle at 2", "model": "2-cycle", "rounds": 2, "nodes": 3},
        {"id": "self-loop at 3", "model": "self-loop", "rounds": 3, "nodes": 4},
        {"id": "singleton at 4", "model": "singleton", "rounds": 4, "nodes": 1},
    ]
    + [{"id": f"random {seed}", "random model": seed, "rounds": _rounds_for(seed, top=4)}
       for seed in RANDOM_MODELS]
)


@template("comonad laws", category="comonad")
def comonad_laws(s, data):
    for key in ("model", "random model"):
        if key in data:
            s.given(key, data[key])
    s.given("rounds", data["rounds"])
    s.when("the comonad laws are checked")
    s.then("the laws should hold")
    s.then("the span should be recorded", "check_comonad_laws")


comonad_laws.cases(
    [
        {"id": "2-cycle at 3", "model": "2-cycle", "rounds": 3},
        {"id": "path2 at 2", "model": "path2", "rounds": 2},
        {"id": "2-type-joint at 2", "model": "2-type-joint", "rounds": 2},
    ]
    + [{"id": f"random {seed}", "random model": seed, "rounds": 1 + _rounds_for(seed, top=2)}
       for seed in RANDOM_MODELS]
)
