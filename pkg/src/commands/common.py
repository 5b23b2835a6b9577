"""
Helpers shared by the subcommand handlers: input resolution, vocabulary
alignment and the closing verdict/result lines.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import TextIO, Tuple

from concepts.logic import LogicSelector
from errors import InterpretationFileError, PreconditionError, VocabularyMismatchError
from fileio import load_interpretation
from fixtures import side, side_names
from games.solver import Rounds, render_rounds
from model.interpretation import PointedInterpretation

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def load_side(arg: str) -> PointedInterpretation:
    """An interpretation file, or the name of a built-in fixture side."""
    path = Path(arg)
    if path.exists():
        return load_interpretation(path)
    if arg in side_names():
        return side(arg)
    raise InterpretationFileError(arg, "<document>", "no such file or fixture")


def require(value, flag: str):
    if value is None:
        raise PreconditionError(f"{flag} is required for this command")
    return value


def align(p: PointedInterpretation, q: PointedInterpretation) -> Tuple[PointedInterpretation, PointedInterpretation]:
    """Give both sides the union of their concept and role names.

    Individuals are not padded: an individual known on one side only has no
    element to denote on the other.
    """
    if p.vocab.individuals != q.vocab.individuals:
        raise VocabularyMismatchError(
            "individual names differ: "
            f"{','.join(sorted(p.vocab.individuals))} vs {','.join(sorted(q.vocab.individuals))}")
    merged = p.vocab.union(q.vocab)
    return (PointedInterpretation(p.interp.expand(merged), p.point),
            PointedInterpretation(q.interp.expand(merged), q.point))


def load_pair(left: str, right: str) -> Tuple[PointedInterpretation, PointedInterpretation]:
    return align(load_side(require(left, "--left")), load_side(require(right, "--right")))


def verdict_line(winner: str, rounds: Rounds, logic: LogicSelector) -> str:
    return f"VERDICT: {winner} rounds={render_rounds(rounds)} logic={logic.render()}"


def result_line(passed: bool) -> str:
    return f"RESULT: {'pass' if passed else 'fail'}"


def exit_code(passed: bool) -> int:
    return EXIT_OK if passed else EXIT_FAIL


def write_text(path: str, text: str, out: TextIO) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    print(f"wrote {target}", file=out)


def write_json(path: str, data: dict, out: TextIO) -> None:
    write_text(path, json.dumps(data, indent=2) + "\n", out)
