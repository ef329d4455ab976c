import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shlat.errors import ParseError, ValidationError
from shlat.lattice import is_equivalent, join
from shlat.workspace import WorkspaceDocument, load_workspace, parse_workspace, serialize_workspace

from conftest import DATA


def test_f1_document():
    doc = load_workspace(DATA / "two_bits.json")
    assert doc.masses == [Fraction(1, 4)] * 4
    assert list(doc.variables) == ["X", "X1", "X2", "X3"]
    X, X1, X2 = doc.variables_named(["X", "X1", "X2"])
    assert is_equivalent(join(X1, X2), X)


def test_decimal_mass_rejected():
    with pytest.raises(ParseError) as exc:
        parse_workspace('{"masses": ["0.25", "0.75"], "variables": {}}')
    assert exc.value.path == "masses[0]"


def test_label_count_mismatch():
    text = json.dumps({"masses": ["1/4"] * 4, "variables": {"X": ["a", "b", "c"]}})
    with pytest.raises(ValidationError) as exc:
        parse_workspace(text)
    assert exc.value.path == "variables.X"


def test_syntax_error_has_line():
    with pytest.raises(ParseError) as exc:
        parse_workspace('{\n  "masses": ["1/2", "1/2"],\n  "variables": {,}\n}')
    assert exc.value.line == 3


@pytest.mark.parametrize(
    "text,err,path",
    [
        ('{"masses": [0.5, 0.5]}', ParseError, "masses[0]"),
        ('{"masses": ["1/0"]}', ParseError, "masses[0]"),
        ('{"masses": "1"}', ParseError, "masses"),
        ('{"variables": {}}', ParseError, "masses"),
        ('{"masses": ["1"], "extra": 1}', ParseError, "extra"),
        ('{"masses": ["1"], "variables": {"X": [1]}}', ParseError, "variables.X[0]"),
        ('{"masses": ["1/2", "1/3"]}', ValidationError, "masses"),
        ('{"masses": ["3/2", "-1/2"]}', ValidationError, "masses[1]"),
        ('{"masses": []}', ValidationError, "masses"),
    ],
)
def test_error_kinds(text, err, path):
    with pytest.raises(err) as exc:
        parse_workspace(text)
    assert exc.value.path == path
    assert not isinstance(exc.value, ParseError if err is ValidationError else ValidationError)


def test_unknown_variable():
    doc = parse_workspace('{"masses": ["1"], "variables": {"X": ["a"]}}')
    with pytest.raises(ValidationError):
        doc.variable("Y")


def test_missing_file(tmp_path):
    with pytest.raises(ParseError):
        load_workspace(tmp_path / "nope.json")


@st.composite
def documents(draw):
    weights = draw(st.lists(st.integers(0, 9), min_size=1, max_size=6))
    if not any(weights):
        weights[0] = 1
    total = sum(weights)
    masses = [Fraction(w, total) for w in weights]
    names = draw(st.lists(st.text("XYZab12", min_size=1, max_size=3), max_size=4, unique=True))
    labels = st.lists(st.text(min_size=0, max_size=4), min_size=len(masses), max_size=len(masses))
    return WorkspaceDocument(masses, {n: draw(labels) for n in names})


@given(documents())
def test_roundtrip(doc):
    text = serialize_workspace(doc)
    again = parse_workspace(text)
    assert again == doc
    assert serialize_workspace(again) == text
