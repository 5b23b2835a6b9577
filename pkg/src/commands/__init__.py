"""Subcommand handlers for the command line."""
from commands.common import EXIT_FAIL, EXIT_OK, EXIT_USAGE, align, load_side, verdict_line
from commands.game_commands import run_bisim, run_bnf, run_play
from commands.model_commands import run_check, run_reduce, run_unravel
from commands.suite_commands import run_laws, run_oracle

# Canonical registry of all subcommands; the order is the order of `--help`
COMMANDS = {
    "check": {
        "name": "Model check a concept at the point",
        "handler": run_check,
        "emoji": "🔎",
    },
    "bisim": {
        "name": "Stratified bisimulation verdict",
        "handler": run_bisim,
        "emoji": "⚖️",
    },
    "reduce": {
        "name": "Reduce to a plain ALC interpretation",
        "handler": run_reduce,
        "emoji": "🔧",
    },
    "unravel": {
        "name": "Depth-k unravelling of a pointed interpretation",
        "handler": run_unravel,
        "emoji": "🌳",
    },
    "laws": {
        "name": "Sampled comonad law checks",
        "handler": run_laws,
        "emoji": "📐",
    },
    "bnf": {
        "name": "Back-and-forth game on unravellings",
        "handler": run_bnf,
        "emoji": "🔁",
    },
    "oracle": {
        "name": "Concept oracles, or the full property suite",
        "handler": run_oracle,
        "emoji": "🧪",
    },
    "play": {
        "name": "Play the bisimulation game",
        "handler": run_play,
        "emoji": "🎲",
    },
}

__all__ = [
    'COMMANDS',
    'EXIT_OK',
    'EXIT_FAIL',
    'EXIT_USAGE',
    'align',
    'load_side',
    'verdict_line',
]
