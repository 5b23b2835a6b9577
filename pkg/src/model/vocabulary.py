"""
Vocabularies: the three finite name sets every structure is built over.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Tuple


@dataclass(frozen=True)
class Vocabulary:
    """Individual, concept and role names. Any of the sets may be empty."""
    individuals: FrozenSet[str] = frozenset()
    concepts: FrozenSet[str] = frozenset()
    roles: FrozenSet[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "individuals", frozenset(self.individuals))
        object.__setattr__(self, "concepts", frozenset(self.concepts))
        object.__setattr__(self, "roles", frozenset(self.roles))

    @classmethod
    def of(cls, individuals: Iterable[str] = (), concepts: Iterable[str] = (),
           roles: Iterable[str] = ()) -> "Vocabulary":
        return cls(frozenset(individuals), frozenset(concepts), frozenset(roles))

    def violations(self) -> List[str]:
        """Names shared between two of the three sets."""
        problems = []
        kinds = (("individual", self.individuals), ("concept", self.concepts), ("role", self.roles))
        for i, (kind_a, names_a) in enumerate(kinds):
            for kind_b, names_b in kinds[i + 1:]:
                for name in sorted(names_a & names_b):
                    problems.append(f"name {name} is used as both {kind_a} and {kind_b}")
        return problems

    def issubset(self, other: "Vocabulary") -> bool:
        return (self.individuals <= other.individuals
                and self.concepts <= other.concepts
                and self.roles <= other.roles)

    def missing_from(self, other: "Vocabulary") -> List[Tuple[str, str]]:
        """(kind, name) pairs of this vocabulary that `other` lacks, sorted."""
        missing = [("individual", n) for n in self.individuals - other.individuals]
        missing += [("concept", n) for n in self.concepts - other.concepts]
        missing += [("role", n) for n in self.roles - other.roles]
        return sorted(missing)

    def union(self, other: "Vocabulary") -> "Vocabulary":
        return Vocabulary(self.individuals | other.individuals,
                          self.concepts | other.concepts,
                          self.roles | other.roles)

    def with_concepts(self, names: Iterable[str]) -> "Vocabulary":
        return Vocabulary(self.individuals, self.concepts | frozenset(names), self.roles)

    def with_roles(self, names: Iterable[str]) -> "Vocabulary":
        return Vocabulary(self.individuals, self.concepts, self.roles | frozenset(names))

    def all_names(self) -> FrozenSet[str]:
        return self.individuals | self.concepts | self.roles

    def describe(self) -> str:
        return (f"individuals={{{','.join(sorted(self.individuals))}}} "
                f"concepts={{{','.join(sorted(self.concepts))}}} "
                f"roles={{{','.join(sorted(self.roles))}}}")
