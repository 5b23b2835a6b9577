"""
Tests for the validated command-line configuration.
"""
import sys
from pathlib import Path

import pytest
from pydantic import ValidationError

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from concepts import ALC, LogicSelector
from config import CliConfig
from games import OMEGA


def test_defaults(monkeypatch):
    for name in ("DLGAMES_SEED", "DLGAMES_SAMPLES", "DLGAMES_OUTPUT_DIR"):
        monkeypatch.delenv(name, raising=False)
    config = CliConfig(command="bisim")
    assert config.logic == ALC
    assert config.rounds == OMEGA
    assert config.samples == 200
    assert CliConfig(command="laws").samples == 10
    assert config.seed == 7
    assert config.output_dir == "suite_results"
    assert config.spoiler == "interactive"


@pytest.mark.parametrize("command", ["unravel", "laws", "bnf", "oracle"])
def test_finite_commands_default_to_depth_two(command):
    assert CliConfig(command=command).rounds == 2


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("DLGAMES_SEED", "11")
    monkeypatch.setenv("DLGAMES_SAMPLES", "3")
    monkeypatch.setenv("DLGAMES_OUTPUT_DIR", "elsewhere")
    config = CliConfig(command="laws")
    assert (config.seed, config.samples, config.output_dir) == (11, 3, "elsewhere")
    assert CliConfig(command="laws", seed=1).seed == 1


def test_values_are_parsed():
    config = CliConfig(command="bisim", logic="{b,Self}", rounds="3")
    assert config.logic == LogicSelector.of("Self", "b")
    assert config.rounds == 3
    assert CliConfig(command="play", rounds="omega").rounds == OMEGA


@pytest.mark.parametrize("command", ["unravel", "laws", "bnf"])
def test_omega_is_rejected_where_depth_must_be_finite(command):
    with pytest.raises(ValidationError, match="finite"):
        CliConfig(command=command, rounds="omega")


@pytest.mark.parametrize("values", [
    {"command": "dance"},
    {"command": "bisim", "logic": "K"},
    {"command": "bisim", "rounds": "-1"},
    {"command": "bisim", "rounds": "many"},
    {"command": "play", "spoiler": "random"},
    {"command": "laws", "samples": -1},
    {"command": "bisim", "colour": "blue"},
])
def test_bad_values_are_rejected(values):
    with pytest.raises(ValidationError):
        CliConfig(**values)
