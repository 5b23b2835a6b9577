"""
Tests for the reductions to plain ALC and their vocabulary maps.
"""
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from concepts import ALC, FULL, LogicSelector
from errors import FreshNameCollisionError, PreconditionError, UnreachableNominalError, UnmappedIndividualError
from fixtures import side
from games import OMEGA, stratified_bisim
from model import (
    Interpretation,
    MorphismWitness,
    PointedInterpretation,
    Vocabulary,
    gaifman_distances,
    reduct,
    validate_interpretation,
)
from reductions import (
    FreshNames,
    nominal_reduction,
    phi_homomorphism,
    reduce_with_report,
    subset_role,
    tau_b,
    tau_inv,
    tau_o,
    tau_phi,
    tau_self,
    vocab_map,
    vocab_map_phi,
)
from reductions.vocab_maps import nonempty_subsets
from strategies import logics, pointed, pointed_pairs


# ── Enrichments ──────────────────────────────────────────────────────

def test_self_enrichment_marks_loops():
    p = tau_self(side("self-loop"))
    assert p.interp.concept("@self:r") == frozenset({"d"})
    assert tau_self(side("2-cycle")).interp.concept("@self:r") == frozenset()


def test_inverse_enrichment_reverses_edges():
    p = tau_inv(side("sink"))
    assert p.interp.role("@inv:r") == frozenset({("e", "d")})
    assert p.interp.role("r") == frozenset({("d", "e")})


def test_boolean_enrichment_groups_by_two_type():
    joint = tau_b(side("2-type-joint")).interp
    assert joint.role("@b:{r,s}") == frozenset({("d", "e")})
    assert joint.role("@b:{r}") == frozenset()
    assert joint.role("r") == frozenset({("d", "e")})

    split = tau_b(side("2-type-split")).interp
    assert split.role("@b:{r}") == frozenset({("d", "e1")})
    assert split.role("@b:{s}") == frozenset({("d", "e2")})
    assert split.role("@b:{r,s}") == frozenset()


def test_boolean_enrichment_caps_the_role_count():
    assert len(nonempty_subsets(["r", "s", "t"])) == 7
    with pytest.raises(PreconditionError):
        nonempty_subsets([f"r{n}" for n in range(17)])


# ── Nominal reduction ────────────────────────────────────────────────

def test_nominal_reduction_builds_components_and_a_distance_chain():
    p = tau_phi(side("nominal-named"), LogicSelector.of("O"))
    i = p.interp
    assert p.point == "@copy:d:d"
    assert i.domain == frozenset({"@copy:d:d", "@copy:d:@tramp:d:o:r", "@copy:e:e"})
    assert i.individual_map == {"o": "@copy:e:e"}
    assert i.role("@dist:o") == frozenset({("@copy:d:d", "@copy:e:e")})
    assert i.concept("@is:o") == frozenset({"@copy:e:e"})
    assert i.concept("@nom:o:r") == frozenset({"@copy:d:@tramp:d:o:r"})
    assert validate_interpretation(i) == []


def test_reach_modes_differ_without_inverses():
    p = side("nominal-unnamed")
    gaifman = tau_o(p)
    forward = tau_o(p, reach="forward")
    assert len(gaifman.domain) == 5
    assert len(forward.domain) == 6
    assert "@never:o" in forward.domain
    assert ("@never:o", "@never:o") in forward.interp.role("@dist:o")


def test_nominal_reduction_rejects_unmapped_and_unreachable_nominals():
    v = Vocabulary.of(individuals=["o"], roles=["r"])
    unmapped = PointedInterpretation(Interpretation.build(["d"], {}, {}, {}, v), "d")
    with pytest.raises(UnmappedIndividualError):
        tau_o(unmapped)
    stray = PointedInterpretation(Interpretation.build(["d", "e"], {"o": "e"}, {}, {}, v), "d")
    with pytest.raises(UnreachableNominalError):
        tau_o(stray)


# ── Composition and report ───────────────────────────────────────────

def test_report_for_the_boolean_reduction():
    reduced, report = reduce_with_report(side("2-type-joint"), LogicSelector.of("b"))
    data = report.to_dict()
    assert data["logic"] == "{b}"
    assert data["stages"] == ["b"]
    assert data["manifest"]["roles"] == ["@b:{r,s}"]
    assert data["elements"] == {"input": 2, "output": 2, "delta": 0}
    assert "@b:{s}" in data["output_vocabulary"]["roles"]
    assert reduced.interp.role("@b:{r,s}") == frozenset({("d", "e")})


def test_empty_selector_is_the_identity():
    p = side("path2")
    assert tau_phi(p, ALC) == p


def test_reserved_input_names_are_rejected():
    v = Vocabulary.of(concepts=["@self:r"], roles=["r"])
    p = PointedInterpretation(Interpretation.build(["d"], {}, {}, {}, v), "d")
    with pytest.raises(FreshNameCollisionError):
        tau_phi(p, LogicSelector.of("Self"))


def test_fresh_names_are_injective():
    fresh = FreshNames(["A"])
    assert fresh.claim("@self:r", ("self", "r")) == "@self:r"
    assert fresh.claim("@self:r", ("self", "r")) == "@self:r"
    with pytest.raises(FreshNameCollisionError):
        fresh.claim("@self:r", ("inv", "r"))
    with pytest.raises(FreshNameCollisionError):
        fresh.claim("A", ("self", "A"))


def test_phi_homomorphism_sees_two_types():
    split, joint = side("2-type-split"), side("2-type-joint")
    h = MorphismWitness({"d": "d", "e1": "e", "e2": "e"})
    assert phi_homomorphism(h, split, joint, ALC)
    assert phi_homomorphism(h, split, joint, LogicSelector.of("I"))
    assert not phi_homomorphism(h, split, joint, LogicSelector.of("b"))
    with pytest.raises(PreconditionError):
        phi_homomorphism(h, split, joint, LogicSelector.of("O"))


# ── Properties ───────────────────────────────────────────────────────

@settings(deadline=None, max_examples=60)
@given(pointed(max_individuals=1), logics())
def test_reduced_vocabulary_follows_the_vocabulary_map(p, logic):
    reduced = tau_phi(p, logic)
    assert reduced.vocab == vocab_map_phi(p.vocab, logic)
    assert validate_interpretation(reduced.interp) == []


def test_single_maps_compose_in_order():
    v = Vocabulary.of(individuals=["o"], concepts=["A"], roles=["r"])
    stepwise = vocab_map(vocab_map(vocab_map(vocab_map(v, "Self"), "I"), "b"), "O")
    assert vocab_map_phi(v, FULL) == stepwise


@settings(deadline=None, max_examples=200)
@given(pointed_pairs(max_size=5, max_individuals=1))
def test_reduction_preserves_the_game(pair):
    p, q = pair
    for logic in LogicSelector.all():
        left, right = tau_phi(p, logic), tau_phi(q, logic)
        for k in range(4):
            direct = stratified_bisim(p, q, logic, k).winner
            reduced = stratified_bisim(left, right, ALC, k).winner
            assert direct == reduced, (logic.render(), k)


@settings(deadline=None, max_examples=60)
@given(pointed_pairs(max_size=3, max_individuals=1))
def test_reduction_preserves_the_unbounded_game(pair):
    p, q = pair
    for logic in LogicSelector.all():
        direct = stratified_bisim(p, q, logic, OMEGA).winner
        reduced = stratified_bisim(tau_phi(p, logic), tau_phi(q, logic), ALC, OMEGA).winner
        assert direct == reduced, logic.render()


def _same_on(a: Interpretation, b: Interpretation, v: Vocabulary) -> bool:
    return (a.domain == b.domain
            and a.individual_map == b.individual_map
            and all(a.concept(c) == b.concept(c) for c in v.concepts)
            and all(a.role(r) == b.role(r) for r in v.roles))


@settings(deadline=None, max_examples=80)
@given(pointed(max_individuals=1))
def test_enrichments_reduct_back_to_the_input(p):
    for tau in (tau_self, tau_inv, tau_b):
        enriched = tau(p)
        assert enriched.point == p.point
        back = reduct(enriched.interp, p.vocab)
        assert back.vocab == p.vocab
        assert _same_on(back, p.interp, p.vocab)


@settings(deadline=None, max_examples=80)
@given(pointed(max_size=4))
def test_boolean_roles_partition_the_connected_pairs(p):
    i = p.interp
    image = tau_b(p).interp
    generated = sorted(image.vocab.roles - i.vocab.roles)
    assert len(generated) == len(nonempty_subsets(i.vocab.roles))
    for a in i.domain:
        for b in i.domain:
            connecting = i.two_type(a, b) & i.vocab.roles
            holders = [r for r in generated if (a, b) in image.role(r)]
            if connecting:
                assert holders == [subset_role(connecting)]
            else:
                assert holders == []


@settings(deadline=None, max_examples=80)
@given(pointed(max_size=4, max_individuals=1))
def test_nominal_reduction_accounts_for_every_element(p):
    i = p.interp
    reduced, manifest = nominal_reduction(p)
    assert len(reduced.domain) == (len(manifest["copies"]) + len(manifest["trampolines"])
                                   + len(manifest["dummies"]))
    distance = gaifman_distances(i, p.point)
    chains = sum(max(distance[e] - 1, 0) for e in i.individual_map.values())
    assert len(manifest["dummies"]) == chains
    assert set(manifest["concepts"]) | set(manifest["roles"]) == \
        (reduced.vocab.concepts - i.vocab.concepts) | (reduced.vocab.roles - i.vocab.roles)
