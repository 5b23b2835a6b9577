"""
Game subcommands: bisim, bnf and play.
"""
from __future__ import annotations

import logging
from typing import TextIO

from commands.common import exit_code, load_pair, verdict_line
from comonad.wgame import DUPLICATOR, bnf_game
from config import CliConfig
from games.engine import ExhaustiveSpoiler, InteractiveSpoiler, run_game
from games.solver import stratified_bisim

logger = logging.getLogger(__name__)


def run_bisim(config: CliConfig, out: TextIO, stdin: TextIO) -> int:
    left, right = load_pair(config.left, config.right)
    sb = stratified_bisim(left, right, config.logic, config.rounds)
    print(f"logic: {config.logic.name()}", file=out)
    print(f"layer sizes: {' '.join(str(n) for n in sb.layer_sizes())}", file=out)
    round_ = sb.distinguishing_round()
    print(f"distinguishing round: {round_ if round_ is not None else 'none'}", file=out)
    print(verdict_line(sb.winner, config.rounds, config.logic), file=out)
    return exit_code(sb.winner == DUPLICATOR)


def run_bnf(config: CliConfig, out: TextIO, stdin: TextIO) -> int:
    left, right = load_pair(config.left, config.right)
    winner = bnf_game(left, right, config.logic, config.rounds)
    print(f"logic: {config.logic.name()}", file=out)
    print(verdict_line(winner, config.rounds, config.logic), file=out)
    return exit_code(winner == DUPLICATOR)


def run_play(config: CliConfig, out: TextIO, stdin: TextIO) -> int:
    left, right = load_pair(config.left, config.right)
    if config.spoiler == "interactive":
        spoiler = InteractiveSpoiler(stdin, out)
    else:
        spoiler = ExhaustiveSpoiler()
    transcript = run_game(left, right, config.logic, config.rounds, spoiler)
    for line in transcript.lines():
        print(line, file=out)
    print(verdict_line(transcript.winner, config.rounds, config.logic), file=out)
    return exit_code(transcript.winner == DUPLICATOR)
