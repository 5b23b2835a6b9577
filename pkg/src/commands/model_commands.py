"""
Single-model subcommands: check, reduce and unravel.
"""
from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import TextIO

from commands.common import exit_code, load_side, require, result_line, write_json, write_text
from comonad.unravel import tree_violations, unravel
from concepts.ast import rank, required_logic
from concepts.parser import parse, to_text
from concepts.semantics import satisfies
from config import CliConfig
from fileio import dump_interpretation
from reductions.compose import reduce_with_report

logger = logging.getLogger(__name__)


def run_check(config: CliConfig, out: TextIO, stdin: TextIO) -> int:
    p = load_side(require(config.left, "--left"))
    concept = parse(require(config.concept, "--concept"))
    holds = satisfies(p, concept)
    print(f"concept: {to_text(concept)}", file=out)
    print(f"rank: {rank(concept)} logic: {required_logic(concept).name()}", file=out)
    print(f"point: {p.point}", file=out)
    print(f"satisfied: {'yes' if holds else 'no'}", file=out)
    print(result_line(holds), file=out)
    return exit_code(holds)


def run_reduce(config: CliConfig, out: TextIO, stdin: TextIO) -> int:
    p = load_side(require(config.left, "--left"))
    reduced, report = reduce_with_report(p, config.logic)
    text = dump_interpretation(reduced)
    print(f"logic: {config.logic.name()}", file=out)
    print(f"stages: {' '.join(report.stages) or 'none'}", file=out)
    print(f"elements: {report.input_elements} -> {report.output_elements}", file=out)
    if config.output:
        write_text(config.output, text, out)
    else:
        out.write(text)
    if config.report:
        if config.output:
            write_json(str(Path(config.output).with_suffix(".report.json")), report.to_dict(), out)
        else:
            print(json.dumps(report.to_dict(), indent=2), file=out)
    print(result_line(True), file=out)
    return exit_code(True)


def run_unravel(config: CliConfig, out: TextIO, stdin: TextIO) -> int:
    p = load_side(require(config.left, "--left"))
    tree = unravel(p, config.rounds)
    problems = tree_violations(tree)
    print(f"depth: {config.rounds}", file=out)
    print(f"nodes: {len(tree)} branches: {sum(1 for _ in tree.branches())}", file=out)
    for problem in problems:
        print(f"violation: {problem}", file=out)
    if config.output:
        write_text(config.output, dump_interpretation(tree.as_pointed()), out)
    else:
        out.write(dump_interpretation(tree.as_pointed()))
    print(result_line(not problems), file=out)
    return exit_code(not problems)
