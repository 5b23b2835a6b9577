"""
Tests for the concept language: parsing, printing, semantics, logic selectors
and the random concept sampler.
"""
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from concepts import (
    ALC,
    FULL,
    And,
    Atomic,
    ConceptSampler,
    Exists,
    ExistsSelf,
    Intersection,
    Inverse,
    LogicSelector,
    Name,
    Nominal,
    Not,
    Union,
    concept_size,
    extent,
    parse,
    random_concept,
    rank,
    required_logic,
    satisfies,
    signature,
    to_text,
)
from errors import (
    ConceptSyntaxError,
    EmptyVocabularyError,
    GrammarViolationError,
    UndefinedIndividualError,
    UnknownNameError,
)
from fileio import load_interpretation
from model import Interpretation, PointedInterpretation, Vocabulary, small_vocabulary
from strategies import logics, pointed

FIXTURES = Path(__file__).parent.parent / "fixtures"


@pytest.fixture
def labelled():
    return load_interpretation(FIXTURES / "labelled.json")


# ── Parsing ──────────────────────────────────────────────────────────

@pytest.mark.parametrize("text, expected", [
    ("A", Name("A")),
    ("{o}", Nominal("o")),
    ("A & !B", And(Name("A"), Not(Name("B")))),
    ("exists r . A", Exists(Atomic("r"), Name("A"))),
    ("exists r- . Self", ExistsSelf(Inverse(Atomic("r")))),
    ("exists r & s . A", Exists(Intersection(Atomic("r"), Atomic("s")), Name("A"))),
    ("exists (r | s) . (A & B)", Exists(Union(Atomic("r"), Atomic("s")), And(Name("A"), Name("B")))),
    ("!exists r . A & B", And(Not(Exists(Atomic("r"), Name("A"))), Name("B"))),
    ('"@b:{r,s}"', Name("@b:{r,s}")),
])
def test_parse(text, expected):
    assert parse(text) == expected


def test_conjunction_is_left_associative():
    assert parse("A & B & C") == And(And(Name("A"), Name("B")), Name("C"))


@pytest.mark.parametrize("text", ["A &", "exists r A", "!", "{o", "A B"])
def test_syntax_errors(text):
    with pytest.raises(ConceptSyntaxError):
        parse(text)


def test_syntax_error_names_the_offending_column():
    with pytest.raises(ConceptSyntaxError) as info:
        parse("A B")
    assert (info.value.line, info.value.column) == (1, 3)


@pytest.mark.parametrize("text", ["exists r & s | t . A", "exists (r & s)- . A"])
def test_grammar_violations(text):
    with pytest.raises(GrammarViolationError):
        parse(text)


# ── Printing ─────────────────────────────────────────────────────────

@pytest.mark.parametrize("text", [
    "A & !B",
    "exists r . (A & B)",
    "exists r- . Self",
    "exists (r | s) & t . A",
    "!(A & B)",
    '{"two words"}',
    '"exists" & "Self"',
])
def test_printer_is_canonical(text):
    assert to_text(parse(text)) == text


def test_names_that_are_not_identifiers_are_quoted():
    assert to_text(Name("@b:{r,s}")) == '"@b:{r,s}"'
    assert to_text(Name("exists")) == '"exists"'


@settings(deadline=None, max_examples=100)
@given(st.integers(0, 10_000), st.integers(0, 3), st.integers(1, 20))
def test_sampled_concepts_survive_printing(seed, max_rank, budget):
    sampler = ConceptSampler(small_vocabulary(2, 2, 1), FULL, seed=seed)
    c = sampler.concept(max_rank, budget)
    assert parse(to_text(c)) == c


# ── Measures ─────────────────────────────────────────────────────────

def test_rank_and_size():
    c = parse("exists r . exists s . A & B")
    assert rank(c) == 2
    assert rank(parse("exists r . Self")) == 1
    assert rank(parse("!A")) == 0
    assert concept_size(parse("exists r . A")) == 3
    assert concept_size(parse("exists r- . A")) == 4


def test_signature_and_required_logic():
    c = parse("exists r- . {o} & exists s & t . Self")
    assert signature(c) == {"individuals": {"o"}, "concepts": set(), "roles": {"r", "s", "t"}}
    assert required_logic(c) == LogicSelector.parse("Self,I,b,O")
    assert required_logic(parse("exists r . A")) == ALC


# ── Semantics ────────────────────────────────────────────────────────

@pytest.mark.parametrize("text, holds", [
    ("A", True),
    ("B", False),
    ("exists r . B", True),
    ("exists s . Self", True),
    ("exists r . Self", False),
    ("exists r . exists r . {o}", True),
    ("exists r- . A", False),
    ("exists r & s . A", False),
    ("exists r | s . A", True),
    ("exists r \\ s . B", True),
    ("!exists r . !B", True),
    ("{o}", False),
])
def test_satisfies_on_labelled_model(labelled, text, holds):
    assert satisfies(labelled, parse(text)) is holds


def test_unmapped_nominal_raises():
    v = Vocabulary.of(individuals=["o"], roles=["r"])
    p = PointedInterpretation(Interpretation.build(["d"], {}, {}, {}, v), "d")
    with pytest.raises(UndefinedIndividualError):
        satisfies(p, Nominal("o"))


def test_unknown_concept_name_raises(labelled):
    with pytest.raises(UnknownNameError):
        satisfies(labelled, parse("Z"))


# ── Logic selectors ──────────────────────────────────────────────────

def test_logic_selector_parse_and_render():
    assert LogicSelector.parse("I,Self").render() == "{Self,I}"
    assert LogicSelector.parse("{}") == ALC
    assert LogicSelector.parse("") == ALC
    assert FULL.render() == "{Self,I,b,O}"
    assert len(LogicSelector.all()) == 16
    assert len(set(LogicSelector.all())) == 16
    with pytest.raises(ValueError):
        LogicSelector.parse("Self,X")


# ── Sampling ─────────────────────────────────────────────────────────

def test_sampler_needs_an_atom():
    with pytest.raises(EmptyVocabularyError):
        ConceptSampler(Vocabulary.of(roles=["r"]), ALC, seed=0)
    # nominals count once O is on
    ConceptSampler(Vocabulary.of(individuals=["o"], roles=["r"]), LogicSelector.of("O"), seed=0)


def test_sampler_is_reproducible():
    v = small_vocabulary(2, 2)
    s1, s2 = ConceptSampler(v, FULL, seed=5), ConceptSampler(v, FULL, seed=5)
    assert [s1.concept(2, 12) for _ in range(10)] == [s2.concept(2, 12) for _ in range(10)]


@settings(deadline=None, max_examples=100)
@given(logics(), st.integers(0, 10_000), st.integers(0, 3), st.integers(1, 20))
def test_sampled_concepts_stay_within_bounds(logic, seed, max_rank, budget):
    sampler = ConceptSampler(small_vocabulary(2, 2, 1), logic, seed=seed)
    c = sampler.concept(max_rank, budget)
    assert rank(c) <= max_rank
    assert concept_size(c) <= budget
    assert required_logic(c).issubset(logic)


def test_random_concept_matches_a_fresh_sampler():
    v = small_vocabulary(2, 1)
    c = random_concept(v, ALC, 2, 10, seed=3)
    assert c == ConceptSampler(v, ALC, seed=3).concept(2, 10)
    assert rank(c) <= 2


@settings(deadline=None, max_examples=100)
@given(pointed(vocab=small_vocabulary(2, 2)), logics(), st.integers(0, 10_000))
def test_extent_laws(p, logic, seed):
    i = p.interp
    c = random_concept(p.vocab, logic, 2, 10, seed=seed)
    assert extent(Not(Not(c)), i) == extent(c, i)
    r, s = Atomic("r"), Atomic("s")
    assert extent(Exists(Union(r, s), c), i) == extent(Exists(r, c), i) | extent(Exists(s, c), i)
    assert extent(And(c, Not(c)), i) == frozenset()
