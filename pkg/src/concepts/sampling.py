"""
Seeded random concepts restricted to the constructors a logic selector licenses.
"""
from __future__ import annotations

import random
from typing import List, Optional

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
    role_size,
)
from concepts.logic import LogicSelector
from errors import EmptyVocabularyError, PreconditionError
from model.vocabulary import Vocabulary


class ConceptSampler:
    """Draws concepts over a fixed vocabulary and logic.

    The sampler owns its random generator, so one instance yields a
    reproducible stream of concepts for a given seed.
    """

    def __init__(self, vocab: Vocabulary, logic: LogicSelector, seed: Optional[int] = None,
                 rng: Optional[random.Random] = None):
        self.logic = logic
        self.rng = rng or random.Random(seed)
        self.concept_names = sorted(vocab.concepts)
        self.nominals = sorted(vocab.individuals) if logic.nominals else []
        self.roles = sorted(vocab.roles)
        if not self.concept_names and not self.nominals:
            raise EmptyVocabularyError("no atomic concept is constructible: "
                                       "no concept names and no nominals available")

    def concept(self, max_rank: int, size_budget: int) -> Concept:
        if size_budget < 1 or max_rank < 0:
            raise PreconditionError("size budget must be at least 1 and rank non-negative")
        return self._concept(max_rank, size_budget)

    def _atom(self) -> Concept:
        pool: List[Concept] = [Name(n) for n in self.concept_names]
        pool += [Nominal(o) for o in self.nominals]
        return self.rng.choice(pool)

    def _concept(self, rank_left: int, budget: int) -> Concept:
        choices = ["atom"]
        if budget >= 2:
            choices.append("not")
        if budget >= 3:
            choices.append("and")
        if rank_left >= 1 and self.roles:
            if budget >= 3:
                choices.append("exists")
            if self.logic.self_ and budget >= 2:
                choices.append("self")
        kind = self.rng.choice(choices)

        if kind == "atom":
            return self._atom()
        if kind == "not":
            return Not(self._concept(rank_left, budget - 1))
        if kind == "and":
            left_budget = self.rng.randint(1, budget - 2)
            return And(self._concept(rank_left, left_budget),
                       self._concept(rank_left, budget - 1 - left_budget))
        if kind == "self":
            return ExistsSelf(self._role(budget - 1))
        role = self._role(max(1, (budget - 1) // 2))
        rest = budget - 1 - role_size(role)
        return Exists(role, self._concept(rank_left - 1, max(rest, 1)))

    def _role(self, budget: int) -> Role:
        choices = ["atomic"]
        if self.logic.inverse and budget >= 2:
            choices.append("inverse")
        if self.logic.boolean and budget >= 3:
            choices.append("binary")
        kind = self.rng.choice(choices)
        if kind == "atomic":
            return Atomic(self.rng.choice(self.roles))
        if kind == "inverse":
            return Inverse(Atomic(self.rng.choice(self.roles)))
        cls = self.rng.choice([Union, Intersection, Difference])
        left_budget = self.rng.randint(1, budget - 2)
        return cls(self._role(left_budget), self._role(budget - 1 - left_budget))


def random_concept(v: Vocabulary, logic: LogicSelector, max_rank: int, size_budget: int,
                   seed: int) -> Concept:
    """One random concept of rank at most `max_rank` and size at most `size_budget`."""
    return ConceptSampler(v, logic, seed=seed).concept(max_rank, size_budget)
