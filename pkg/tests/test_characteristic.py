"""
Characteristic concepts against the solver, and sampled concepts as a
soundness check of Duplicator's wins.
"""
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from concepts import ALC, ConceptSampler, LogicSelector, characteristic_concept, parse, rank, satisfies
from errors import PreconditionError
from fixtures import FIXTURES, side
from games import stratified_bisim
from model import PointedInterpretation, small_vocabulary
from strategies import finite_rounds, logics, pointed, pointed_pairs


def _with_concept_a(p: PointedInterpretation) -> PointedInterpretation:
    return PointedInterpretation(p.interp.expand(small_vocabulary(1, 0)), p.point)


def test_characteristic_concept_has_the_requested_rank():
    p = _with_concept_a(side("path2"))
    for k in range(4):
        assert rank(characteristic_concept(p, k)) == k


def test_characteristic_concept_needs_a_concept_name():
    with pytest.raises(PreconditionError):
        characteristic_concept(side("path1"), 1)


def test_characteristic_concept_separates_the_paths_at_two():
    left, right = _with_concept_a(side("path1")), _with_concept_a(side("path2"))
    assert satisfies(right, characteristic_concept(left, 1))
    assert not satisfies(right, characteristic_concept(left, 2))


@settings(deadline=None, max_examples=40)
@given(pointed(vocab=small_vocabulary(2, 2), max_size=4), finite_rounds(3))
def test_point_satisfies_its_own_characteristic_concept(p, k):
    assert satisfies(p, characteristic_concept(p, k))


@settings(deadline=None, max_examples=80)
@given(st.data(), finite_rounds(3))
def test_characteristic_concept_decides_the_alc_game(data, k):
    v = small_vocabulary(data.draw(st.integers(1, 2)), data.draw(st.integers(1, 2)))
    p = data.draw(pointed(vocab=v, max_size=4))
    q = data.draw(pointed(vocab=v, max_size=4))
    duplicator = stratified_bisim(p, q, ALC, k).winner == "duplicator"
    assert satisfies(q, characteristic_concept(p, k)) is duplicator


@settings(deadline=None, max_examples=60)
@given(pointed_pairs(max_size=3, max_individuals=1), logics(), finite_rounds(3),
       st.integers(0, 1_000))
def test_sampled_concepts_never_separate_a_duplicator_win(pair, logic, k, seed):
    p, q = pair
    if stratified_bisim(p, q, logic, k).winner != "duplicator":
        return
    if not p.vocab.concepts and not (logic.nominals and p.vocab.individuals):
        return
    sampler = ConceptSampler(p.vocab, logic, seed=seed)
    for _ in range(20):
        c = sampler.concept(k, 12)
        assert satisfies(p, c) == satisfies(q, c)


@pytest.mark.parametrize("name, logic, concept", [
    ("self-loop", "Self", "exists r . Self"),
    ("sink", "I", "exists r- . !(A & !A)"),
    ("2-type", "b", "exists r & s . !(A & !A)"),
    ("nominal", "O", "exists r . {o}"),
])
def test_fixture_separations_have_witnesses(name, logic, concept):
    pair = FIXTURES[name]
    left, right = _with_concept_a(pair.left), _with_concept_a(pair.right)
    assert stratified_bisim(left, right, LogicSelector.parse(logic), 1).winner == "spoiler"
    c = parse(concept)
    assert satisfies(left, c) != satisfies(right, c)
