"""
Fresh names and vocabulary maps for the four enrichments.

Every generated symbol carries the reserved '@' prefix:

    @self:r           concept, elements with an r-self-loop
    @inv:r            role, the inverse of r
    @b:{r,s}          role, pairs whose set of connecting roles is exactly {r, s}
    @nom:o:r          concept, trampolines recording an r-edge into o
    @is:o             concept, the copy of the element named o
    @dist:o           role, the dummy chain leading to o's component
    @dummy:o:i        element, i-th dummy on that chain
    @never:o          element, looping dummy for a nominal the point cannot reach
    @tramp:d:o:r      element, trampoline for the edge d -r-> o
    @copy:x:d         element, copy of d in the component rooted at x
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, Hashable, Iterable, List

from concepts.logic import EXTENSION_ORDER, Extension, LogicSelector
from errors import FreshNameCollisionError, PreconditionError
from model.vocabulary import Vocabulary

RESERVED_PREFIX = "@"
MAX_BOOLEAN_ROLES = 16


def self_concept(role: str) -> str:
    return f"@self:{role}"


def inverse_role(role: str) -> str:
    return f"@inv:{role}"


def subset_role(roles: Iterable[str]) -> str:
    return "@b:{" + ",".join(sorted(roles)) + "}"


def nominal_concept(individual: str, role: str) -> str:
    return f"@nom:{individual}:{role}"


def marker_concept(individual: str) -> str:
    return f"@is:{individual}"


def distance_role(individual: str) -> str:
    return f"@dist:{individual}"


def dummy_element(individual: str, n: int) -> str:
    return f"@dummy:{individual}:{n}"


def never_element(individual: str) -> str:
    return f"@never:{individual}"


def trampoline_element(element: str, individual: str, role: str) -> str:
    return f"@tramp:{element}:{individual}:{role}"


def copy_element(root: str, element: str) -> str:
    return f"@copy:{root}:{element}"


def reserved_names(v: Vocabulary) -> List[str]:
    return sorted(n for n in v.all_names() if n.startswith(RESERVED_PREFIX))


class FreshNames:
    """Registry that keeps generated names injective and away from existing names."""

    def __init__(self, existing: Iterable[str] = ()):
        self.existing = frozenset(existing)
        self.claimed: Dict[str, Hashable] = {}

    def claim(self, name: str, key: Hashable) -> str:
        if name in self.existing:
            raise FreshNameCollisionError(f"generated name {name} is already in use")
        owner = self.claimed.setdefault(name, key)
        if owner != key:
            raise FreshNameCollisionError(f"generated name {name} is produced by both {owner!r} and {key!r}")
        return name


def nonempty_subsets(roles: Iterable[str]) -> List[frozenset]:
    names = sorted(roles)
    if len(names) > MAX_BOOLEAN_ROLES:
        raise PreconditionError(f"b-enrichment supports at most {MAX_BOOLEAN_ROLES} role names, "
                                f"got {len(names)}")
    return [frozenset(c) for size in range(1, len(names) + 1) for c in combinations(names, size)]


# ── Vocabulary maps ──────────────────────────────────────────────────

def _self_map(v: Vocabulary) -> Vocabulary:
    fresh = FreshNames(v.all_names())
    return v.with_concepts(fresh.claim(self_concept(r), ("self", r)) for r in sorted(v.roles))


def _inverse_map(v: Vocabulary) -> Vocabulary:
    fresh = FreshNames(v.all_names())
    return v.with_roles(fresh.claim(inverse_role(r), ("inv", r)) for r in sorted(v.roles))


def _boolean_map(v: Vocabulary) -> Vocabulary:
    fresh = FreshNames(v.all_names())
    return v.with_roles(fresh.claim(subset_role(s), ("b", s)) for s in nonempty_subsets(v.roles))


def _nominal_map(v: Vocabulary) -> Vocabulary:
    fresh = FreshNames(v.all_names())
    concepts = [fresh.claim(nominal_concept(o, r), ("nom", o, r))
                for o in sorted(v.individuals) for r in sorted(v.roles)]
    concepts += [fresh.claim(marker_concept(o), ("is", o)) for o in sorted(v.individuals)]
    roles = [fresh.claim(distance_role(o), ("dist", o)) for o in sorted(v.individuals)]
    return v.with_concepts(concepts).with_roles(roles)


@dataclass(frozen=True)
class VocabularyMap:
    tag: Extension
    apply: Callable[[Vocabulary], Vocabulary]

    def __call__(self, v: Vocabulary) -> Vocabulary:
        return self.apply(v)


VOCABULARY_MAPS: Dict[Extension, VocabularyMap] = {
    Extension.SELF: VocabularyMap(Extension.SELF, _self_map),
    Extension.INV: VocabularyMap(Extension.INV, _inverse_map),
    Extension.B: VocabularyMap(Extension.B, _boolean_map),
    Extension.O: VocabularyMap(Extension.O, _nominal_map),
}


def vocab_map(v: Vocabulary, tag) -> Vocabulary:
    return VOCABULARY_MAPS[Extension(tag)](v)


def vocab_map_phi(v: Vocabulary, logic: LogicSelector) -> Vocabulary:
    """Compose the maps of the selected extensions in reduction order."""
    for tag in EXTENSION_ORDER:
        if tag in logic:
            v = vocab_map(v, tag)
    return v
