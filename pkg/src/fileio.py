"""
Interpretation files.

A file is one JSON object:

    {
      "domain": ["d", "e"],
      "point": "d",
      "individuals": {"o": "e"},
      "concepts": {"A": ["d"]},
      "roles": {"r": [["d", "e"]]}
    }

Unknown keys are rejected. `point` defaults to the first domain element.
"""
from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from errors import InterpretationFileError
from model.interpretation import Interpretation, PointedInterpretation, validate_interpretation
from model.vocabulary import Vocabulary

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class InterpretationFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    domain: List[str] = Field(min_length=1)
    point: Optional[str] = None
    individuals: Dict[str, str] = Field(default_factory=dict)
    concepts: Dict[str, List[str]] = Field(default_factory=dict)
    roles: Dict[str, List[Tuple[str, str]]] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _point_in_domain(self) -> "InterpretationFile":
        if self.point is not None and self.point not in self.domain:
            raise ValueError(f"point {self.point} is not a domain element")
        return self

    def to_pointed(self) -> PointedInterpretation:
        vocab = Vocabulary.of(self.individuals, self.concepts, self.roles)
        interp = Interpretation.build(self.domain, self.individuals, self.concepts, self.roles, vocab)
        return PointedInterpretation(interp, self.point or self.domain[0])

    @classmethod
    def from_pointed(cls, p: PointedInterpretation) -> "InterpretationFile":
        i = p.interp
        return cls(
            domain=sorted(i.domain),
            point=p.point,
            individuals={o: i.individual_map[o] for o in sorted(i.individual_map)},
            concepts={c: sorted(i.concept_ext.get(c, ())) for c in sorted(i.vocab.concepts)},
            roles={r: sorted(i.role_ext.get(r, ())) for r in sorted(i.vocab.roles)},
        )


def _field_path(error: dict) -> str:
    return ".".join(str(part) for part in error.get("loc", ())) or "<document>"


def parse_interpretation(text: str, source: str = "<string>",
                         allow_reserved: bool = False) -> PointedInterpretation:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise InterpretationFileError(source, "<document>", f"not valid JSON ({e.msg})") from None
    try:
        doc = InterpretationFile.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        raise InterpretationFileError(source, _field_path(first), first["msg"]) from None

    if not allow_reserved:
        for kind in ("individuals", "concepts", "roles"):
            for name in getattr(doc, kind):
                if name.startswith("@"):
                    raise InterpretationFileError(source, f"{kind}.{name}",
                                                  "names starting with '@' are reserved")

    p = doc.to_pointed()
    problems = validate_interpretation(p.interp)
    if problems:
        raise InterpretationFileError(source, "<document>", problems[0])
    logger.debug("loaded %s: %d elements, %s", source, len(p.domain), p.vocab.describe())
    return p


def load_interpretation(path: PathLike, allow_reserved: bool = False) -> PointedInterpretation:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InterpretationFileError(str(path), "<document>", e.strerror or str(e)) from None
    return parse_interpretation(text, str(path), allow_reserved)


def dump_interpretation(p: PointedInterpretation) -> str:
    return json.dumps(InterpretationFile.from_pointed(p).model_dump(), indent=2) + "\n"


def save_interpretation(p: PointedInterpretation, path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_interpretation(p), encoding="utf-8")
    logger.info("wrote %s", path)
    return path
