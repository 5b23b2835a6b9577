"""
Property-checking subcommands: laws and oracle.

`oracle` with two inputs runs the concept oracles on that pair; without
inputs it runs the registered property suite.
"""
from __future__ import annotations

import logging
from contextlib import redirect_stdout
from typing import TextIO

from commands.common import exit_code, load_pair, load_side, require, result_line
from comonad.laws import check_comonad_laws
from comonad.wgame import DUPLICATOR
from concepts.characteristic import characteristic_concept
from concepts.parser import to_text
from concepts.sampling import ConceptSampler
from concepts.semantics import satisfies
from config import LAW_SAMPLES, CliConfig
from errors import PreconditionError
from games.solver import is_omega, stratified_bisim
from suite import SuiteOptions, SuiteRunner, get_all_cases, get_cases_by_category
from suite.actions import with_concept_name

logger = logging.getLogger(__name__)

SAMPLE_SIZE_BUDGET = 12


def run_laws(config: CliConfig, out: TextIO, stdin: TextIO) -> int:
    p = load_side(require(config.left, "--left"))
    report = check_comonad_laws(p, config.rounds, config.samples, config.seed)
    for line in report.lines():
        print(line, file=out)
    print(f"samples: {report.samples} skipped: {report.skipped}", file=out)
    print(result_line(report.passed), file=out)
    return exit_code(report.passed)


def run_oracle(config: CliConfig, out: TextIO, stdin: TextIO) -> int:
    if config.left is None and config.right is None:
        return _run_suite(config, out)
    return _run_pair_oracle(config, out)


def _run_pair_oracle(config: CliConfig, out: TextIO) -> int:
    if is_omega(config.rounds):
        raise PreconditionError("oracle on a pair needs a finite number of rounds")
    left, right = load_pair(config.left, config.right)
    left, right = with_concept_name(left), with_concept_name(right)
    k = config.rounds
    winner = stratified_bisim(left, right, config.logic, k).winner
    print(f"solver: {winner}", file=out)
    consistent = True

    if not config.logic.ordered():
        concept = characteristic_concept(left, k)
        holds = satisfies(right, concept)
        agrees = holds == (winner == DUPLICATOR)
        consistent &= agrees
        print(f"characteristic concept: {'holds' if holds else 'fails'} on right"
              f" ({'agrees' if agrees else 'disagrees'})", file=out)

    sampler = ConceptSampler(left.vocab, config.logic, seed=config.seed)
    separating = []
    for _ in range(config.samples):
        c = sampler.concept(k, SAMPLE_SIZE_BUDGET)
        if satisfies(left, c) != satisfies(right, c):
            separating.append(c)
    print(f"sampled concepts: {len(separating)}/{config.samples} separate the pair", file=out)
    if separating:
        print(f"first separating concept: {to_text(separating[0])}", file=out)
    if winner == DUPLICATOR and separating:
        consistent = False

    print(result_line(consistent), file=out)
    return exit_code(consistent)


def _run_suite(config: CliConfig, out: TextIO) -> int:
    import suite.cases  # noqa: F401  registers the built-in cases

    cases = get_cases_by_category(config.category) if config.category else get_all_cases()
    if not cases:
        raise PreconditionError(f"no suite cases in category {config.category!r}")
    runner = SuiteRunner(config.output_dir, SuiteOptions(samples=config.samples, seed=config.seed,
                                                       law_samples=min(config.samples, LAW_SAMPLES)))
    with redirect_stdout(out):
        results = runner.run_all(cases, quiet=True)
        runner.print_summary(results)
        runner.save_results(results, config.output)
    passed = all(r.passed for r in results)
    print(result_line(passed), file=out)
    return exit_code(passed)
