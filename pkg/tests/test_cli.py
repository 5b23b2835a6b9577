"""
End-to-end tests for the command line through run_command.
"""
import io
import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from main import run_command

FIXTURE_DIR = Path(__file__).parent.parent / "fixtures"


def _run(*argv, stdin: str = ""):
    out = io.StringIO()
    code = run_command(list(argv), out=out, stdin=io.StringIO(stdin))
    return code, out.getvalue().splitlines()


# ── Game commands ────────────────────────────────────────────────────

def test_bisim_on_the_path_fixture():
    code, lines = _run("bisim", "--left", "path1", "--right", "path2", "--logic", "", "--rounds", "2")
    assert code == 1
    assert "distinguishing round: 2" in lines
    assert lines[-1] == "VERDICT: spoiler rounds=2 logic={}"


def test_bisim_reads_files():
    code, lines = _run("bisim", "--left", str(FIXTURE_DIR / "sink.json"),
                       "--right", str(FIXTURE_DIR / "singleton.json"), "--logic", "I", "--rounds", "1")
    assert code == 1
    assert lines[-1] == "VERDICT: spoiler rounds=1 logic={I}"


def test_reflexive_bisim_under_every_extension():
    code, lines = _run("bisim", "-l", "nominal-unnamed", "-r", "nominal-unnamed", "--logic", "Self,I,b,O")
    assert code == 0
    assert lines[-1] == "VERDICT: duplicator rounds=omega logic={Self,I,b,O}"
    assert "distinguishing round: none" in lines


def test_bnf_matches_bisim():
    code, lines = _run("bnf", "--left", "self-loop", "--right", "2-cycle", "--logic", "Self", "--rounds", "1")
    assert code == 1
    assert lines[-1] == "VERDICT: spoiler rounds=1 logic={Self}"


def test_play_with_the_exhaustive_spoiler():
    code, lines = _run("play", "--left", "path1", "--right", "path2", "--rounds", "2", "--spoiler", "exhaustive")
    assert code == 1
    assert lines[0].startswith("round 1: SPOILER")
    assert any(line.startswith("WINNER: spoiler") for line in lines)
    assert lines[-1] == "VERDICT: spoiler rounds=2 logic={}"


def test_interactive_play_reads_moves_from_stdin():
    code, lines = _run("play", "--left", "path1", "--right", "path2", "--rounds", "1", stdin="left r e1\n")
    assert code == 0
    assert lines[-1] == "VERDICT: duplicator rounds=1 logic={}"


# ── Model commands ───────────────────────────────────────────────────

def test_check_a_concept():
    labelled = str(FIXTURE_DIR / "labelled.json")
    code, lines = _run("check", "--left", labelled, "--concept", "exists r . B")
    assert code == 0
    assert "satisfied: yes" in lines
    assert lines[-1] == "RESULT: pass"
    code, lines = _run("check", "--left", labelled, "--concept", "B")
    assert code == 1
    assert lines[-1] == "RESULT: fail"


def test_reduce_writes_the_image_and_report(tmp_path):
    target = tmp_path / "joint.json"
    code, lines = _run("reduce", "--left", "2-type-joint", "--logic", "b", "--report", "--output", str(target))
    assert code == 0
    assert lines[-1] == "RESULT: pass"
    image = json.loads(target.read_text())
    assert image["roles"]["@b:{r,s}"] == [["d", "e"]]
    report = json.loads((tmp_path / "joint.report.json").read_text())
    assert report["stages"] == ["b"]


def test_unravel_prints_the_tree():
    code, lines = _run("unravel", "--left", "2-cycle", "--rounds", "2")
    assert code == 0
    assert "nodes: 3 branches: 1" in lines
    assert lines[-1] == "RESULT: pass"


def test_laws_pass_on_a_fixture():
    code, lines = _run("laws", "--left", "2-cycle", "--rounds", "2", "--samples", "4", "--seed", "1")
    assert code == 0
    assert lines[0] == "depth=2 samples=4 seed=1 skipped=" + lines[-2].split("skipped: ")[1]
    assert lines[-1] == "RESULT: pass"


def test_oracle_on_a_pair():
    code, lines = _run("oracle", "--left", "path1", "--right", "path2", "--samples", "10")
    assert code == 0
    assert lines[0] == "solver: spoiler"
    assert lines[1] == "characteristic concept: fails on right (agrees)"
    assert lines[-1] == "RESULT: pass"


def test_oracle_runs_a_suite_category(tmp_path):
    target = tmp_path / "suite.json"
    code, lines = _run("oracle", "--category", "ladder", "--samples", "3", "--output", str(target))
    assert code == 0
    assert json.loads(target.read_text())["summary"]["failed"] == 0
    assert lines[-1] == "RESULT: pass"


# ── Errors and listing ───────────────────────────────────────────────

@pytest.mark.parametrize("argv", [
    ("bisim", "--left", "no-such-thing", "--right", "path2"),
    ("bisim", "--left", "path1"),
    ("bisim", "--left", "path1", "--right", "nominal-named"),
    ("unravel", "--left", "path1", "--rounds", "omega"),
    ("bisim", "--left", "path1", "--right", "path2", "--logic", "K"),
    ("check", "--left", "path1", "--concept", "exists r ."),
    ("check", "--left", "path1", "--concept", "Missing"),
    ("oracle", "--left", "path1", "--right", "path2", "--rounds", "omega"),
    ("frobnicate",),
])
def test_usage_and_input_errors_exit_with_two(argv, capsys):
    code, _ = _run(*argv)
    assert code == 2


def test_bad_file_names_the_field(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"domain": ["d"], "colour": "blue"}))
    code, _ = _run("unravel", "--left", str(bad))
    assert code == 2
    assert "field 'colour'" in capsys.readouterr().err


def test_list_commands():
    code, lines = _run("--list-commands")
    assert code == 0
    assert lines[0] == "Available commands:"
    assert len(lines) == 9


@pytest.mark.parametrize("argv", [
    ("bisim", "--left", "self-loop", "--right", "2-cycle", "--logic", "Self,I", "--rounds", "3"),
    ("laws", "--left", "2-cycle", "--rounds", "2", "--samples", "5", "--seed", "4"),
    ("oracle", "--left", "sink", "--right", "singleton", "--samples", "20", "--seed", "9"),
    ("play", "--left", "path1", "--right", "path2", "--rounds", "2", "--spoiler", "exhaustive"),
])
def test_repeated_runs_print_identical_output(argv):
    first, second = _run(*argv), _run(*argv)
    assert first == second


def test_reduce_writes_identical_files(tmp_path):
    outputs = []
    for name in ("one.json", "two.json"):
        target = tmp_path / name
        _run("reduce", "--left", "nominal-named", "--logic", "Self,I,b,O", "--report", "--output", str(target))
        outputs.append((target.read_bytes(), target.with_suffix(".report.json").read_bytes()))
    assert outputs[0] == outputs[1]


def test_deep_finite_bisim_runs():
    code, lines = _run("bisim", "--left", "self-loop", "--right", "self-loop", "--rounds", "5")
    assert code == 0
    assert lines[-1] == "VERDICT: duplicator rounds=5 logic={}"
