"""
Logic selectors: which of the four extensions (Self, I, b, O) a game,
concept sampler or reduction is run for. The empty selector is plain ALC.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import FrozenSet, Iterable, List, Union


class Extension(str, Enum):
    SELF = "Self"
    INV = "I"
    B = "b"
    O = "O"


# canonical order, also the order reductions are composed in
EXTENSION_ORDER = (Extension.SELF, Extension.INV, Extension.B, Extension.O)


@dataclass(frozen=True)
class LogicSelector:
    extensions: FrozenSet[Extension] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "extensions", frozenset(Extension(e) for e in self.extensions))

    @classmethod
    def parse(cls, text: str) -> "LogicSelector":
        """Parse a comma-set such as "Self,I" or "{b,O}"; "" and "{}" are plain ALC."""
        body = text.strip()
        if body.startswith("{") and body.endswith("}"):
            body = body[1:-1]
        tags = [t.strip() for t in body.split(",") if t.strip()]
        known = {e.value: e for e in Extension}
        unknown = [t for t in tags if t not in known]
        if unknown:
            raise ValueError(f"unknown logic extension(s): {', '.join(unknown)} "
                             f"(expected a subset of Self,I,b,O)")
        return cls(frozenset(known[t] for t in tags))

    @classmethod
    def of(cls, *tags: Union[str, Extension]) -> "LogicSelector":
        return cls(frozenset(Extension(t) for t in tags))

    @classmethod
    def all(cls) -> List["LogicSelector"]:
        """All 16 selectors, smallest first."""
        out = []
        for size in range(len(EXTENSION_ORDER) + 1):
            for combo in combinations(EXTENSION_ORDER, size):
                out.append(cls(frozenset(combo)))
        return out

    def __contains__(self, tag: Union[str, Extension]) -> bool:
        return Extension(tag) in self.extensions

    def __iter__(self):
        return iter(self.ordered())

    def ordered(self) -> List[Extension]:
        return [e for e in EXTENSION_ORDER if e in self.extensions]

    @property
    def self_(self) -> bool:
        return Extension.SELF in self.extensions

    @property
    def inverse(self) -> bool:
        return Extension.INV in self.extensions

    @property
    def boolean(self) -> bool:
        return Extension.B in self.extensions

    @property
    def nominals(self) -> bool:
        return Extension.O in self.extensions

    def issubset(self, other: "LogicSelector") -> bool:
        return self.extensions <= other.extensions

    def union(self, other: "LogicSelector") -> "LogicSelector":
        return LogicSelector(self.extensions | other.extensions)

    def without(self, *tags: Union[str, Extension]) -> "LogicSelector":
        return LogicSelector(self.extensions - {Extension(t) for t in tags})

    def subsets(self) -> List["LogicSelector"]:
        return [s for s in LogicSelector.all() if s.issubset(self)]

    def render(self) -> str:
        """Brace form used in verdict lines, e.g. {} or {Self,I,b,O}."""
        return "{" + ",".join(e.value for e in self.ordered()) + "}"

    def to_arg(self) -> str:
        return ",".join(e.value for e in self.ordered())

    def name(self) -> str:
        """Description-logic style name, e.g. ALC or ALC_Self I b O."""
        return "ALC" + "".join(
            {"Self": "_Self", "I": "I", "b": "b", "O": "O"}[e.value] for e in self.ordered())

    def __str__(self) -> str:
        return self.render()


ALC = LogicSelector()
FULL = LogicSelector(frozenset(EXTENSION_ORDER))


def logic_of(tags: Iterable[Union[str, Extension]]) -> LogicSelector:
    return LogicSelector(frozenset(Extension(t) for t in tags))
