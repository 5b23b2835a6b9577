"""
Named fixture models.

Each pair isolates one extension of the logic: the left and right sides
agree for plain ALC but come apart once the extension is switched on.
Single sides can be looked up by name, which the CLI accepts in place of
an interpretation file.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List

from errors import UnknownNameError
from model.interpretation import Interpretation, PointedInterpretation
from model.vocabulary import Vocabulary


@dataclass(frozen=True)
class FixturePair:
    name: str
    left_name: str
    right_name: str
    description: str

    @property
    def left(self) -> PointedInterpretation:
        return side(self.left_name)

    @property
    def right(self) -> PointedInterpretation:
        return side(self.right_name)


def _pointed(domain, point, roles, concepts=None, individuals=None, vocab=None) -> PointedInterpretation:
    return PointedInterpretation(Interpretation.build(domain, individuals, concepts, roles, vocab), point)


ROLE_R = Vocabulary.of(roles=["r"])
ROLES_RS = Vocabulary.of(roles=["r", "s"])
NOMINAL_O = Vocabulary.of(individuals=["o"], roles=["r"])

_SIDES = {
    "path1": lambda: _pointed(["d1", "e1"], "d1", {"r": [("d1", "e1")]}, vocab=ROLE_R),
    "path2": lambda: _pointed(["d2", "e2", "f2"], "d2", {"r": [("d2", "e2"), ("e2", "f2")]}, vocab=ROLE_R),
    "self-loop": lambda: _pointed(["d"], "d", {"r": [("d", "d")]}, vocab=ROLE_R),
    "2-cycle": lambda: _pointed(["x", "y"], "x", {"r": [("x", "y"), ("y", "x")]}, vocab=ROLE_R),
    "sink": lambda: _pointed(["d", "e"], "e", {"r": [("d", "e")]}, vocab=ROLE_R),
    "singleton": lambda: _pointed(["e"], "e", {}, vocab=ROLE_R),
    "2-type-joint": lambda: _pointed(["d", "e"], "d", {"r": [("d", "e")], "s": [("d", "e")]}, vocab=ROLES_RS),
    "2-type-split": lambda: _pointed(["d", "e1", "e2"], "d", {"r": [("d", "e1")], "s": [("d", "e2")]},
                                     vocab=ROLES_RS),
    "nominal-named": lambda: _pointed(["d", "e"], "d", {"r": [("d", "e")]}, individuals={"o": "e"},
                                      vocab=NOMINAL_O),
    "nominal-unnamed": lambda: _pointed(["d", "e", "f"], "d", {"r": [("d", "e"), ("f", "d")]},
                                        individuals={"o": "f"}, vocab=NOMINAL_O),
}

FIXTURES: Dict[str, FixturePair] = {
    "path": FixturePair("path", "path1", "path2",
                        "one r-step against two; apart after two rounds"),
    "self-loop": FixturePair("self-loop", "self-loop", "2-cycle",
                             "an r-loop against an r-cycle; apart only with Self"),
    "sink": FixturePair("sink", "sink", "singleton",
                        "a sink with a predecessor against a lone element; apart only with I"),
    "2-type": FixturePair("2-type", "2-type-joint", "2-type-split",
                          "one edge carrying r and s against two separate edges; apart only with b"),
    "nominal": FixturePair("nominal", "nominal-named", "nominal-unnamed",
                           "an r-successor named o against an unnamed one; apart only with O"),
}


def side(name: str) -> PointedInterpretation:
    try:
        return _SIDES[name]()
    except KeyError:
        raise UnknownNameError("fixture", name) from None


def side_names() -> List[str]:
    return sorted(_SIDES)


def fixture(name: str) -> FixturePair:
    try:
        return FIXTURES[name]
    except KeyError:
        raise UnknownNameError("fixture", name) from None
