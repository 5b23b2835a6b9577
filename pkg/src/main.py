"""
Main entry point for the DL bisimulation games toolkit.

    python src/main.py bisim --left path1 --right path2 --logic "" --rounds 2
    python src/main.py reduce --left 2-type-joint --logic b --report
    python src/main.py oracle            # runs the property suite

Every game command ends with a `VERDICT:` line and every other command with
a `RESULT:` line. Exit codes: 0 equivalent or pass, 1 distinguishable or
fail, 2 usage or input error.
"""
import sys
import logging
import argparse
from pathlib import Path
from typing import List, Optional, TextIO

from dotenv import load_dotenv
from pydantic import ValidationError

# Add parent directory to path to allow absolute imports from src
sys.path.insert(0, str(Path(__file__).parent))

from commands import COMMANDS, EXIT_USAGE
from config import SPOILER_KINDS, CliConfig
from errors import DLGamesError
from utils.tracing import setup_tracing, tracing_requested

logger = logging.getLogger(__name__)

# flags each subcommand accepts, beyond -v
_FLAGS = {
    "check": ("left", "concept"),
    "bisim": ("left", "right", "logic", "rounds"),
    "reduce": ("left", "logic", "output", "report"),
    "unravel": ("left", "rounds", "output"),
    "laws": ("left", "rounds", "samples", "seed"),
    "bnf": ("left", "right", "logic", "rounds"),
    "oracle": ("left", "right", "logic", "rounds", "samples", "seed", "output", "output_dir", "category"),
    "play": ("left", "right", "logic", "rounds", "spoiler"),
}


def _add_flag(p: argparse.ArgumentParser, flag: str) -> None:
    if flag == "left":
        p.add_argument("--left", "-l", type=str, help="Interpretation file or fixture side name")
    elif flag == "right":
        p.add_argument("--right", "-r", type=str, help="Interpretation file or fixture side name")
    elif flag == "logic":
        p.add_argument("--logic", type=str, default="",
                       help="Comma set over Self,I,b,O (default: empty, plain ALC)")
    elif flag == "rounds":
        p.add_argument("--rounds", "-k", type=str, default=None,
                       help="Number of rounds or 'omega'")
    elif flag == "concept":
        p.add_argument("--concept", "-c", type=str, help="Concept in the concrete syntax")
    elif flag == "samples":
        p.add_argument("--samples", type=int, default=None, help="Sample count (env DLGAMES_SAMPLES)")
    elif flag == "seed":
        p.add_argument("--seed", type=int, default=None, help="Random seed (env DLGAMES_SEED)")
    elif flag == "output":
        p.add_argument("--output", "-o", type=str, default=None, help="Write the result to this file")
    elif flag == "output_dir":
        p.add_argument("--output-dir", type=str, default=None,
                       help="Directory for suite results (env DLGAMES_OUTPUT_DIR)")
    elif flag == "report":
        p.add_argument("--report", action="store_true", help="Also emit the reduction report as JSON")
    elif flag == "spoiler":
        p.add_argument("--spoiler", choices=SPOILER_KINDS, default="interactive",
                       help="Who plays Spoiler (default: interactive)")
    elif flag == "category":
        p.add_argument("--category", type=str, default=None, help="Run only this suite category")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dlgames", description="Bisimulation games for ALC and its extensions")
    parser.add_argument(
        "--verbose", "-v",
        action="count",
        default=0,
        help="Increase logging verbosity (-v for INFO, -vv for DEBUG)"
    )
    parser.add_argument(
        "--list-commands",
        action="store_true",
        help="List available commands and exit"
    )
    sub = parser.add_subparsers(dest="command")
    for key, info in COMMANDS.items():
        p = sub.add_parser(key, help=info["name"], description=info["name"])
        for flag in _FLAGS[key]:
            _add_flag(p, flag)
    return parser


def _configure_logging(verbose: int) -> None:
    log_level = logging.WARNING
    if verbose >= 2:
        log_level = logging.DEBUG
    elif verbose >= 1:
        log_level = logging.INFO
    logging.basicConfig(
        level=log_level,
        format="%(asctime)s %(name)s %(levelname)s: %(message)s",
        datefmt="%H:%M:%S",
        stream=sys.stderr,
    )


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    values = {k: v for k, v in vars(args).items()
              if k not in ("verbose", "list_commands") and v is not None}
    return CliConfig(**values)


def _validation_message(e: ValidationError) -> str:
    first = e.errors()[0]
    field = ".".join(str(part) for part in first.get("loc", ())) or "arguments"
    return f"{field}: {first.get('msg', 'invalid value')}"


def run_command(argv: Optional[List[str]] = None, out: Optional[TextIO] = None,
                stdin: Optional[TextIO] = None) -> int:
    """Parse argv, dispatch to the subcommand, and return the exit code."""
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    _configure_logging(args.verbose)
    if tracing_requested():
        setup_tracing()

    if args.list_commands:
        print("Available commands:", file=out)
        for key, info in COMMANDS.items():
            print(f"  {info['emoji']} {key:<10} - {info['name']}", file=out)
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    try:
        config = _config_from_args(args)
    except ValidationError as e:
        print(f"error: {_validation_message(e)}", file=sys.stderr)
        return EXIT_USAGE

    handler = COMMANDS[config.command]["handler"]
    logger.info("running %s", config.command)
    try:
        return handler(config, out, stdin)
    except DLGamesError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main():
    # Load environment variables
    load_dotenv()
    sys.exit(run_command())


if __name__ == "__main__":
    main()
