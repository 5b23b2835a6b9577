"""
Tests for the property suite: registry, runner, checks and the saved report.
"""
import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

import suite.cases  # noqa: F401
from suite import SuiteOptions, SuiteRunner, get_all_cases, get_cases_by_category
from suite.checks import CaseOutput, match_check
from suite.dsl import CaseBuilder

CATEGORIES = {"ladder", "triad", "reductions", "wgame", "comonad"}


def _case(case_id: str) -> CaseBuilder:
    return next(c for c in get_all_cases() if c.case_id == case_id)


@pytest.fixture(scope="module")
def runner(tmp_path_factory):
    return SuiteRunner(str(tmp_path_factory.mktemp("suite")), SuiteOptions(samples=5, seed=7, law_samples=3))


def test_registry_covers_every_category():
    cases = get_all_cases()
    assert {c.category for c in cases} == CATEGORIES
    assert len({c.case_id for c in cases}) == len(cases)
    for category in CATEGORIES:
        assert all(c.category == category for c in get_cases_by_category(category))


@pytest.mark.parametrize("case_id, span", [
    ("ladder_sink_i_1", "stratified_bisim"),
    ("path_unravelled", "bnf_game"),
    ("comonad_laws_2_cycle_at_3", "check_comonad_laws"),
])
def test_fixture_cases_pass_and_record_spans(runner, case_id, span):
    result = runner.run_case(_case(case_id))
    assert result.error is None
    assert result.passed, [c.detail for c in result.checks if not c.passed]
    assert span in result.spans


def test_unravelling_case_checks_the_node_count(runner):
    result = runner.run_case(_case("unravelling_2_cycle_at_2"))
    assert result.passed
    assert any(c.step_text.startswith("the node count should be") for c in result.checks)


def test_unknown_steps_score_zero(runner):
    c = CaseBuilder("made_up", "made up", "ladder")
    c.given("fixture", "path")
    c.when("the moon decides")
    c.then("the verdict should be", "spoiler")
    result = runner.run_case(c)
    assert not result.passed
    assert result.overall_score == 0.0
    assert "No action handler" in result.checks[0].detail


def test_summary_and_saved_results(runner, tmp_path, capsys):
    results = runner.run_all([_case("ladder_sink_i_1"), _case("path_distinguishing_round")], quiet=True)
    frame = runner.summary_frame(results)
    assert list(frame["case"]) == ["ladder_sink_i_1", "path_distinguishing_round"]
    assert frame["passed"].all()

    runner.print_summary(results)
    assert "Passed: 2/2 cases" in capsys.readouterr().out

    target = runner.save_results(results, str(tmp_path / "r.json"))
    saved = json.loads(target.read_text())
    assert saved["summary"]["total"] == 2
    assert saved["summary"]["failed"] == 0
    assert saved["options"] == {"samples": 5, "law_samples": 3, "seed": 7}


def test_span_check_fails_when_nothing_was_captured():
    result = match_check("the span should be recorded", ("stratified_bisim",), CaseOutput())
    assert not result.passed
    assert result.score == 0.0
    assert "No spans captured" in result.detail


def test_reduction_cases_cover_every_depth_up_to_three():
    cases = [c for c in get_cases_by_category("reductions") if c.case_id.startswith("reduction_random")]
    assert len(cases) == 200
    assert {c.context["rounds"] for c in cases} == {3}
    assert len([c for c in get_cases_by_category("wgame") if "random" in c.case_id]) == 100
