"""
Validated command-line configuration.

Command-line flags win over environment values; environment values win over
the built-in defaults:

    DLGAMES_SEED        random seed for sampling (7)
    DLGAMES_SAMPLES     sampled maps per law check (10) or concepts per oracle pair (200)
    DLGAMES_OUTPUT_DIR  where the oracle suite writes results (suite_results)
    DLGAMES_TRACE       1 turns on span capture
"""
from __future__ import annotations

import os
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from concepts.logic import LogicSelector
from games.solver import OMEGA, is_omega, parse_rounds

COMMAND_NAMES = ("check", "bisim", "reduce", "unravel", "laws", "bnf", "oracle", "play")
FINITE_ROUNDS = ("unravel", "laws", "bnf")
FINITE_DEFAULT = FINITE_ROUNDS + ("oracle",)
SPOILER_KINDS = ("interactive", "exhaustive")
DEFAULT_DEPTH = 2
LAW_SAMPLES = 10
CONCEPT_SAMPLES = 200


def _env_int(name: str, default: Optional[int]) -> Optional[int]:
    value = os.getenv(name)
    return int(value) if value not in (None, "") else default


class CliConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)

    command: str
    left: Optional[str] = None
    right: Optional[str] = None
    logic: LogicSelector = Field(default_factory=LogicSelector)
    rounds: Union[int, str, None] = None
    concept: Optional[str] = None
    samples: Optional[int] = Field(default_factory=lambda: _env_int("DLGAMES_SAMPLES", None), ge=0)
    seed: int = Field(default_factory=lambda: _env_int("DLGAMES_SEED", 7))
    report: bool = False
    output: Optional[str] = None
    output_dir: str = Field(default_factory=lambda: os.getenv("DLGAMES_OUTPUT_DIR") or "suite_results")
    spoiler: str = "interactive"
    category: Optional[str] = None

    @field_validator("command")
    @classmethod
    def _known_command(cls, value: str) -> str:
        if value not in COMMAND_NAMES:
            raise ValueError(f"unknown command {value!r}")
        return value

    @field_validator("logic", mode="before")
    @classmethod
    def _parse_logic(cls, value):
        if value is None:
            return LogicSelector()
        if isinstance(value, str):
            return LogicSelector.parse(value)
        return value

    @field_validator("rounds", mode="before")
    @classmethod
    def _parse_rounds(cls, value):
        if value is None:
            return None
        return parse_rounds(value)

    @field_validator("spoiler")
    @classmethod
    def _known_spoiler(cls, value: str) -> str:
        if value not in SPOILER_KINDS:
            raise ValueError(f"spoiler must be one of {', '.join(SPOILER_KINDS)}")
        return value

    @model_validator(mode="after")
    def _resolve_defaults(self) -> "CliConfig":
        rounds = self.rounds
        if rounds is None:
            rounds = DEFAULT_DEPTH if self.command in FINITE_DEFAULT else OMEGA
            self.rounds = rounds
        if self.command in FINITE_ROUNDS and is_omega(rounds):
            raise ValueError(f"{self.command} needs a finite number of rounds, not omega")
        if self.samples is None:
            self.samples = LAW_SAMPLES if self.command == "laws" else CONCEPT_SAMPLES
        return self
