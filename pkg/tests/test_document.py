from fractions import Fraction as F

import pytest

from sperndeg.document import Instance, dump, load, parse, serialize
from sperndeg.errors import ParseError, ValidationError
from sperndeg.fixtures import fixture_text, names

SMALL = """{
  "dimension": 2,
  "n": 3,
  "signed": false,
  "vertices": [
    [0, 0],
    [1, 0],
    ["1/2", "3/4"]
  ],
  "simplices": [
    [0, 1, 2]
  ],
  "labels": [1, 2, 3],
  "note": "one triangle"
}
"""


def test_canonical_round_trip():
    doc = parse(SMALL)
    assert doc.vertices[2] == (F(1, 2), F(3, 4))
    assert serialize(doc) == SMALL


@pytest.mark.parametrize("name", names())
def test_bundled_documents_are_canonical(name):
    text = fixture_text(name)
    assert serialize(parse(text)) == text
    assert "\r" not in text


def test_non_canonical_input_is_normalised():
    text = '{"n": 3, "dimension": 2, "signed": false, "vertices": [[0,0],[1,0],["2/4","6/8"]],' \
           ' "simplices": [[0,1,2]], "labels": [1,2,3], "note": "one triangle"}'
    assert serialize(parse(text)) == SMALL


def test_float_rejected_with_position():
    text = SMALL.replace('"3/4"', "0.75")
    with pytest.raises(ParseError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (8, 13)
    assert info.value.exit_code == 4


def test_exponent_rejected():
    with pytest.raises(ParseError):
        parse(SMALL.replace("[1, 0]", "[1e0, 0]"))


def test_syntax_error_position():
    with pytest.raises(ParseError) as info:
        parse(SMALL.replace('"n": 3,', '"n": 3'))
    assert info.value.line == 4


def test_all_violations_reported():
    text = SMALL.replace('"labels": [1, 2, 3]', '"labels": [1, 7]').replace("[0, 1, 2]", "[0, 1, 5]")
    with pytest.raises(ValidationError) as info:
        parse(text)
    msgs = info.value.violations
    assert any("out of range" in m for m in msgs)
    assert any("2 entries for 3 vertices" in m for m in msgs)
    assert any("outside 1..3" in m for m in msgs)
    assert info.value.exit_code == 5


def test_missing_and_unknown_fields():
    with pytest.raises(ValidationError) as info:
        parse('{"dimension": 2, "n": 3, "signed": false, "colour": 1}')
    msgs = info.value.violations
    assert "unknown field 'colour'" in msgs
    assert "missing field 'vertices'" in msgs


def test_bad_rationals():
    with pytest.raises(ValidationError) as info:
        parse(SMALL.replace('"1/2"', '"1/0"').replace('"3/4"', '"x"'))
    assert len(info.value.violations) == 2


def test_signed_labels_range():
    text = SMALL.replace('"signed": false', '"signed": true').replace("[1, 2, 3]", "[1, -2, 0]")
    with pytest.raises(ValidationError) as info:
        parse(text)
    assert info.value.violations == ["labels[2]: 0 is outside +-1..+-3"]


def test_file_round_trip(tmp_path):
    doc = parse(SMALL)
    path = tmp_path / "x.json"
    dump(doc, path)
    assert path.read_bytes() == SMALL.encode()
    assert load(path) == doc


def test_orientable_flag_written_only_when_false():
    doc = parse(SMALL)
    flipped = Instance(**{**doc.__dict__, "orientable": False})
    text = serialize(flipped)
    assert '"orientable": false' in text
    assert parse(text).orientable is False
