"""
Model checking: role and concept extents in a finite interpretation.
"""
from __future__ import annotations

from typing import Dict, FrozenSet

from concepts.ast import (
    And,
    Atomic,
    Concept,
    Difference,
    Exists,
    ExistsSelf,
    Intersection,
    Inverse,
    Name,
    Nominal,
    Not,
    Role,
    Union,
)
from errors import UndefinedIndividualError
from model.interpretation import Element, Interpretation, Pair, PointedInterpretation


def role_extent(r: Role, i: Interpretation) -> FrozenSet[Pair]:
    if isinstance(r, Atomic):
        return i.role(r.name)
    if isinstance(r, Inverse):
        return frozenset((b, a) for a, b in role_extent(r.role, i))
    if isinstance(r, Union):
        return role_extent(r.left, i) | role_extent(r.right, i)
    if isinstance(r, Intersection):
        return role_extent(r.left, i) & role_extent(r.right, i)
    if isinstance(r, Difference):
        return role_extent(r.left, i) - role_extent(r.right, i)
    raise TypeError(f"not a role: {r!r}")


def extent(c: Concept, i: Interpretation) -> FrozenSet[Element]:
    return _extent(c, i, {})


def _extent(c: Concept, i: Interpretation, seen: Dict[int, FrozenSet[Element]]) -> FrozenSet[Element]:
    # keyed by object identity: characteristic concepts share subtrees
    key = id(c)
    if key not in seen:
        seen[key] = _evaluate(c, i, seen)
    return seen[key]


def _evaluate(c: Concept, i: Interpretation, seen: Dict[int, FrozenSet[Element]]) -> FrozenSet[Element]:
    if isinstance(c, Name):
        return i.concept(c.name)
    if isinstance(c, Nominal):
        element = i.individual(c.name)
        if element is None:
            raise UndefinedIndividualError(c.name)
        return frozenset({element})
    if isinstance(c, Not):
        return i.domain - _extent(c.arg, i, seen)
    if isinstance(c, And):
        return _extent(c.left, i, seen) & _extent(c.right, i, seen)
    if isinstance(c, Exists):
        pairs = role_extent(c.role, i)
        filler = _extent(c.concept, i, seen)
        return frozenset(a for a, b in pairs if b in filler)
    if isinstance(c, ExistsSelf):
        return frozenset(a for a, b in role_extent(c.role, i) if a == b)
    raise TypeError(f"not a concept: {c!r}")


def satisfies(p: PointedInterpretation, c: Concept) -> bool:
    return p.point in extent(c, p.interp)
