"""
Abstract syntax for concepts and simple roles.

Roles:    Atomic | Inverse(Atomic) | Union | Intersection | Difference
Concepts: Name | Nominal | Not | And | Exists | ExistsSelf

Names are checked against a vocabulary when a concept is evaluated, not
when it is built. Disjunction, top and bottom are not constructors; the
macros at the end of this module expand them into Not/And.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
import typing
from typing import FrozenSet, Iterable, List, Set

from concepts.logic import Extension, LogicSelector
from errors import GrammarViolationError


# ── Roles ────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Atomic:
    name: str


@dataclass(frozen=True)
class Inverse:
    role: "Atomic"

    def __post_init__(self):
        if not isinstance(self.role, Atomic):
            raise GrammarViolationError("inverse applies to atomic roles only")


@dataclass(frozen=True)
class Union:
    left: "Role"
    right: "Role"


@dataclass(frozen=True)
class Intersection:
    left: "Role"
    right: "Role"


@dataclass(frozen=True)
class Difference:
    left: "Role"
    right: "Role"


Role = typing.Union[Atomic, Inverse, Union, Intersection, Difference]
BINARY_ROLES = (Union, Intersection, Difference)
ROLE_OPERATORS = {Union: "|", Intersection: "&", Difference: "\\"}


# ── Concepts ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class Nominal:
    name: str


@dataclass(frozen=True)
class Not:
    arg: "Concept"


@dataclass(frozen=True)
class And:
    left: "Concept"
    right: "Concept"


@dataclass(frozen=True)
class Exists:
    role: Role
    concept: "Concept"


@dataclass(frozen=True)
class ExistsSelf:
    role: Role


Concept = typing.Union[Name, Nominal, Not, And, Exists, ExistsSelf]


# ── Measures ─────────────────────────────────────────────────────────

def rank(c: Concept) -> int:
    """Maximal nesting depth of existential restrictions; ExistsSelf counts as one."""
    if isinstance(c, (Name, Nominal)):
        return 0
    if isinstance(c, Not):
        return rank(c.arg)
    if isinstance(c, And):
        return max(rank(c.left), rank(c.right))
    if isinstance(c, Exists):
        return 1 + rank(c.concept)
    if isinstance(c, ExistsSelf):
        return 1
    raise TypeError(f"not a concept: {c!r}")


def role_size(r: Role) -> int:
    if isinstance(r, Atomic):
        return 1
    if isinstance(r, Inverse):
        return 2
    return 1 + role_size(r.left) + role_size(r.right)


def concept_size(c: Concept) -> int:
    """Number of AST nodes, role nodes included."""
    if isinstance(c, (Name, Nominal)):
        return 1
    if isinstance(c, Not):
        return 1 + concept_size(c.arg)
    if isinstance(c, And):
        return 1 + concept_size(c.left) + concept_size(c.right)
    if isinstance(c, Exists):
        return 1 + role_size(c.role) + concept_size(c.concept)
    if isinstance(c, ExistsSelf):
        return 1 + role_size(c.role)
    raise TypeError(f"not a concept: {c!r}")


def role_names(r: Role) -> FrozenSet[str]:
    if isinstance(r, Atomic):
        return frozenset({r.name})
    if isinstance(r, Inverse):
        return role_names(r.role)
    return role_names(r.left) | role_names(r.right)


def signature(c: Concept) -> dict:
    """Names used by `c`, keyed by kind."""
    found = {"individuals": set(), "concepts": set(), "roles": set()}

    def walk(x: Concept) -> None:
        if isinstance(x, Name):
            found["concepts"].add(x.name)
        elif isinstance(x, Nominal):
            found["individuals"].add(x.name)
        elif isinstance(x, Not):
            walk(x.arg)
        elif isinstance(x, And):
            walk(x.left)
            walk(x.right)
        elif isinstance(x, Exists):
            found["roles"] |= role_names(x.role)
            walk(x.concept)
        elif isinstance(x, ExistsSelf):
            found["roles"] |= role_names(x.role)

    walk(c)
    return found


def required_logic(c: Concept) -> LogicSelector:
    """The smallest selector whose language contains `c`."""
    tags: Set[Extension] = set()

    def role_walk(r: Role) -> None:
        if isinstance(r, Inverse):
            tags.add(Extension.INV)
        elif isinstance(r, BINARY_ROLES):
            tags.add(Extension.B)
            role_walk(r.left)
            role_walk(r.right)

    def walk(x: Concept) -> None:
        if isinstance(x, Nominal):
            tags.add(Extension.O)
        elif isinstance(x, Not):
            walk(x.arg)
        elif isinstance(x, And):
            walk(x.left)
            walk(x.right)
        elif isinstance(x, Exists):
            role_walk(x.role)
            walk(x.concept)
        elif isinstance(x, ExistsSelf):
            tags.add(Extension.SELF)
            role_walk(x.role)

    walk(c)
    return LogicSelector(frozenset(tags))


# ── Macros ───────────────────────────────────────────────────────────

def bottom(concept_name: str) -> Concept:
    """A ⊓ ¬A for a designated concept name."""
    return And(Name(concept_name), Not(Name(concept_name)))


def top(concept_name: str) -> Concept:
    return Not(bottom(concept_name))


def conjunction(parts: Iterable[Concept], concept_name: str) -> Concept:
    items: List[Concept] = list(parts)
    if not items:
        return top(concept_name)
    return reduce(And, items)


def disjunction(parts: Iterable[Concept], concept_name: str) -> Concept:
    items: List[Concept] = list(parts)
    if not items:
        return bottom(concept_name)
    if len(items) == 1:
        return items[0]
    return Not(reduce(And, [Not(x) for x in items]))
