"""
Finite interpretations and pointed interpretations.

An interpretation is a labelled directed multigraph: concept names label
elements, role names label ordered pairs, and individual names pick out
single elements. Values are immutable once built; the lookup indexes are
computed lazily and cached on the instance.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from errors import InvalidInterpretationError, UnknownElementError, UnknownNameError
from model.vocabulary import Vocabulary

Element = str
Pair = Tuple[str, str]


@dataclass(frozen=True)
class Interpretation:
    domain: FrozenSet[Element]
    individual_map: Mapping[str, Element] = field(default_factory=dict)
    concept_ext: Mapping[str, FrozenSet[Element]] = field(default_factory=dict)
    role_ext: Mapping[str, FrozenSet[Pair]] = field(default_factory=dict)
    vocab: Vocabulary = field(default_factory=Vocabulary)

    def __post_init__(self):
        object.__setattr__(self, "domain", frozenset(self.domain))
        object.__setattr__(self, "individual_map", dict(self.individual_map))
        object.__setattr__(self, "concept_ext",
                           {name: frozenset(ext) for name, ext in self.concept_ext.items()})
        object.__setattr__(self, "role_ext",
                           {name: frozenset((a, b) for a, b in ext) for name, ext in self.role_ext.items()})

    @classmethod
    def build(
        cls,
        domain: Iterable[Element],
        individuals: Optional[Mapping[str, Element]] = None,
        concepts: Optional[Mapping[str, Iterable[Element]]] = None,
        roles: Optional[Mapping[str, Iterable[Pair]]] = None,
        vocab: Optional[Vocabulary] = None,
    ) -> "Interpretation":
        """Build an interpretation, filling absent in-vocabulary names with empty extents.

        When `vocab` is omitted it is inferred from the keys of the three maps.
        """
        individuals = dict(individuals or {})
        concepts = {k: frozenset(v) for k, v in (concepts or {}).items()}
        roles = {k: frozenset(tuple(p) for p in v) for k, v in (roles or {}).items()}
        if vocab is None:
            vocab = Vocabulary(frozenset(individuals), frozenset(concepts), frozenset(roles))
        for name in vocab.concepts:
            concepts.setdefault(name, frozenset())
        for name in vocab.roles:
            roles.setdefault(name, frozenset())
        return cls(frozenset(domain), individuals, concepts, roles, vocab)

    # ── Lookups ──────────────────────────────────────────────────────

    def concept(self, name: str) -> FrozenSet[Element]:
        if name not in self.vocab.concepts:
            raise UnknownNameError("concept", name)
        return self.concept_ext.get(name, frozenset())

    def role(self, name: str) -> FrozenSet[Pair]:
        if name not in self.vocab.roles:
            raise UnknownNameError("role", name)
        return self.role_ext.get(name, frozenset())

    def individual(self, name: str) -> Optional[Element]:
        if name not in self.vocab.individuals:
            raise UnknownNameError("individual", name)
        return self.individual_map.get(name)

    def require_element(self, element: Element) -> None:
        if element not in self.domain:
            raise UnknownElementError(element)

    def successors(self, role: str, element: Element) -> FrozenSet[Element]:
        return self._successor_index.get(role, {}).get(element, frozenset())

    def predecessors(self, role: str, element: Element) -> FrozenSet[Element]:
        return self._predecessor_index.get(role, {}).get(element, frozenset())

    def two_type(self, a: Element, b: Element) -> FrozenSet[str]:
        """Role names r with (a, b) in r's extent."""
        return self._two_types.get((a, b), frozenset())

    def labels(self, element: Element) -> FrozenSet[str]:
        return self._label_index.get(element, frozenset())

    def names_of(self, element: Element) -> FrozenSet[str]:
        """Individual names interpreted as `element`."""
        return self._name_index.get(element, frozenset())

    def self_loops(self, element: Element) -> FrozenSet[str]:
        return self.two_type(element, element)

    def edges(self) -> List[Tuple[str, Element, Element]]:
        """All (role, source, target) triples in a stable order."""
        return sorted((r, a, b) for r, ext in self.role_ext.items() for a, b in ext)

    def sorted_domain(self) -> List[Element]:
        return sorted(self.domain)

    # ── Derived interpretations ──────────────────────────────────────

    def expand(self, vocab: Vocabulary) -> "Interpretation":
        """Extend the vocabulary; new concept and role names get empty extents."""
        merged = self.vocab.union(vocab)
        return Interpretation.build(self.domain, self.individual_map, self.concept_ext,
                                    self.role_ext, merged)

    # ── Cached indexes ───────────────────────────────────────────────

    @cached_property
    def _successor_index(self) -> Dict[str, Dict[Element, FrozenSet[Element]]]:
        index: Dict[str, Dict[Element, set]] = {}
        for role, ext in self.role_ext.items():
            per_role = index.setdefault(role, {})
            for a, b in ext:
                per_role.setdefault(a, set()).add(b)
        return {r: {a: frozenset(bs) for a, bs in m.items()} for r, m in index.items()}

    @cached_property
    def _predecessor_index(self) -> Dict[str, Dict[Element, FrozenSet[Element]]]:
        index: Dict[str, Dict[Element, set]] = {}
        for role, ext in self.role_ext.items():
            per_role = index.setdefault(role, {})
            for a, b in ext:
                per_role.setdefault(b, set()).add(a)
        return {r: {b: frozenset(as_) for b, as_ in m.items()} for r, m in index.items()}

    @cached_property
    def _two_types(self) -> Dict[Pair, FrozenSet[str]]:
        types: Dict[Pair, set] = {}
        for role, ext in self.role_ext.items():
            for pair in ext:
                types.setdefault(pair, set()).add(role)
        return {pair: frozenset(rs) for pair, rs in types.items()}

    @cached_property
    def _label_index(self) -> Dict[Element, FrozenSet[str]]:
        index: Dict[Element, set] = {}
        for name, ext in self.concept_ext.items():
            for d in ext:
                index.setdefault(d, set()).add(name)
        return {d: frozenset(ns) for d, ns in index.items()}

    @cached_property
    def _name_index(self) -> Dict[Element, FrozenSet[str]]:
        index: Dict[Element, set] = {}
        for name, d in self.individual_map.items():
            index.setdefault(d, set()).add(name)
        return {d: frozenset(ns) for d, ns in index.items()}


@dataclass(frozen=True)
class PointedInterpretation:
    interp: Interpretation
    point: Element

    def __post_init__(self):
        if self.point not in self.interp.domain:
            raise UnknownElementError(self.point)

    @property
    def vocab(self) -> Vocabulary:
        return self.interp.vocab

    @property
    def domain(self) -> FrozenSet[Element]:
        return self.interp.domain


# ── Validation and reducts ───────────────────────────────────────────

def validate_interpretation(i: Interpretation) -> List[str]:
    """Return one human-readable message per violated invariant, empty when well-formed."""
    problems: List[str] = []
    if not i.domain:
        problems.append("empty domain")
    problems.extend(i.vocab.violations())

    for name in sorted(set(i.concept_ext) - i.vocab.concepts):
        problems.append(f"concept {name} is not in the vocabulary")
    for name in sorted(set(i.role_ext) - i.vocab.roles):
        problems.append(f"role {name} is not in the vocabulary")
    for name in sorted(set(i.individual_map) - i.vocab.individuals):
        problems.append(f"individual {name} is not in the vocabulary")

    for name in sorted(i.concept_ext):
        for d in sorted(i.concept_ext[name] - i.domain):
            problems.append(f"extent of {name} mentions non-domain element {d}")
    for name in sorted(i.role_ext):
        stray = {x for pair in i.role_ext[name] for x in pair} - i.domain
        for d in sorted(stray):
            problems.append(f"extent of {name} mentions non-domain element {d}")
    for name in sorted(i.individual_map):
        d = i.individual_map[name]
        if d not in i.domain:
            problems.append(f"individual {name} is mapped to non-domain element {d}")
    for name in sorted(i.vocab.individuals - set(i.individual_map)):
        problems.append(f"individual {name} is unmapped")
    return problems


def require_valid(i: Interpretation) -> Interpretation:
    problems = validate_interpretation(i)
    if problems:
        raise InvalidInterpretationError(problems)
    return i


def reduct(i: Interpretation, keep: Vocabulary) -> Interpretation:
    """Forget every symbol outside `keep`; domain and kept extents are unchanged."""
    missing = keep.missing_from(i.vocab)
    if missing:
        kind, name = missing[0]
        raise UnknownNameError(kind, name)
    return Interpretation(
        domain=i.domain,
        individual_map={o: d for o, d in i.individual_map.items() if o in keep.individuals},
        concept_ext={c: i.concept_ext.get(c, frozenset()) for c in keep.concepts},
        role_ext={r: i.role_ext.get(r, frozenset()) for r in keep.roles},
        vocab=keep,
    )
