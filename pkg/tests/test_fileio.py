"""
Tests for reading and writing interpretation files.
"""
import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from errors import InterpretationFileError
from fileio import dump_interpretation, load_interpretation, parse_interpretation, save_interpretation
from fixtures import side, side_names

FIXTURE_DIR = Path(__file__).parent.parent / "fixtures"


def _doc(**overrides) -> str:
    doc = {"domain": ["d", "e"], "point": "d", "roles": {"r": [["d", "e"]]}}
    doc.update(overrides)
    return json.dumps(doc)


def test_parse_minimal_document():
    p = parse_interpretation(_doc())
    assert p.point == "d"
    assert p.interp.role("r") == frozenset({("d", "e")})
    assert p.vocab.concepts == frozenset()


def test_point_defaults_to_the_first_element():
    p = parse_interpretation(json.dumps({"domain": ["z", "a"]}))
    assert p.point == "z"


def test_labelled_fixture_file():
    p = load_interpretation(FIXTURE_DIR / "labelled.json")
    assert p.interp.individual("o") == "c"
    assert p.interp.concept("A") == frozenset({"a", "c"})
    assert p.interp.role("s") == frozenset({("a", "a")})


def test_unknown_keys_are_rejected():
    with pytest.raises(InterpretationFileError) as info:
        parse_interpretation(_doc(colour="blue"), "m.json")
    assert info.value.field == "colour"
    assert str(info.value).startswith("m.json: field 'colour'")


def test_point_outside_the_domain():
    with pytest.raises(InterpretationFileError) as info:
        parse_interpretation(_doc(point="z"))
    assert "not a domain element" in str(info.value)


def test_nested_field_is_named():
    with pytest.raises(InterpretationFileError) as info:
        parse_interpretation(_doc(roles={"r": [["d", "e", "f"]]}))
    assert info.value.field.startswith("roles.r.0")


def test_reserved_names_are_rejected_unless_allowed():
    text = _doc(concepts={"@self:r": ["d"]})
    with pytest.raises(InterpretationFileError) as info:
        parse_interpretation(text)
    assert info.value.field == "concepts.@self:r"
    assert parse_interpretation(text, allow_reserved=True).interp.concept("@self:r") == frozenset({"d"})


def test_extensions_must_stay_in_the_domain():
    with pytest.raises(InterpretationFileError) as info:
        parse_interpretation(_doc(roles={"r": [["d", "q"]]}))
    assert info.value.field == "<document>"


def test_broken_json_and_missing_files():
    with pytest.raises(InterpretationFileError, match="not valid JSON"):
        parse_interpretation("{")
    with pytest.raises(InterpretationFileError):
        load_interpretation(FIXTURE_DIR / "missing.json")


@pytest.mark.parametrize("name", [n for n in side_names() if (FIXTURE_DIR / f"{n}.json").exists()])
def test_fixture_files_match_the_builtin_sides(name):
    assert load_interpretation(FIXTURE_DIR / f"{name}.json") == side(name)


def test_save_then_load(tmp_path):
    p = side("nominal-unnamed")
    target = save_interpretation(p, tmp_path / "out" / "m.json")
    assert target.exists()
    assert load_interpretation(target) == p
    assert json.loads(dump_interpretation(p))["individuals"] == {"o": "f"}
