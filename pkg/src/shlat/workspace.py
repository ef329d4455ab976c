"""JSON workspace documents: outcome masses plus named label arrays.

Schema::

    {"masses": ["1/4", "1/4", "1/2"],
     "variables": {"X": ["a", "b", "c"], "Y": ["0", "0", "1"]}}

Masses must be rational strings (``"3"`` or ``"p/q"``); decimals are refused so
that no mass is ever rounded.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError, ValidationError
from .probability import ProbabilitySpace, RandomVariable, new_space, rv

_RATIONAL = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


@dataclass
class WorkspaceDocument:
    masses: list[Fraction]
    variables: dict[str, list[str]] = field(default_factory=dict)

    def space(self) -> ProbabilitySpace:
        return new_space(self.masses)

    def variable(self, name: str, space: ProbabilitySpace | None = None) -> RandomVariable:
        if name not in self.variables:
            raise ValidationError(f"unknown variable {name!r}", f"variables.{name}")
        return rv(space or self.space(), self.variables[name], name)

    def variables_named(self, names) -> list[RandomVariable]:
        space = self.space()
        return [self.variable(n, space) for n in names]


def parse_rational(text, path: str) -> Fraction:
    if not isinstance(text, str):
        raise ParseError(f"expected a rational string, got {type(text).__name__}", path)
    m = _RATIONAL.match(text)
    if not m:
        raise ParseError(f"{text!r} is not an integer or p/q rational", path)
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ParseError("zero denominator", path)
    return Fraction(num, den)


def parse_workspace(text: str) -> WorkspaceDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    unknown = sorted(set(data) - {"masses", "variables"})
    if unknown:
        raise ParseError(f"unexpected key {unknown[0]!r}", unknown[0])
    if "masses" not in data:
        raise ParseError("missing key", "masses")
    raw = data["masses"]
    if not isinstance(raw, list):
        raise ParseError("expected an array", "masses")
    masses = [parse_rational(m, f"masses[{i}]") for i, m in enumerate(raw)]

    variables = data.get("variables", {})
    if not isinstance(variables, dict):
        raise ParseError("expected an object", "variables")
    for name, labels in variables.items():
        if not isinstance(labels, list):
            raise ParseError("expected an array of labels", f"variables.{name}")
        for i, lab in enumerate(labels):
            if not isinstance(lab, str):
                raise ParseError(f"label must be a string, got {type(lab).__name__}", f"variables.{name}[{i}]")

    doc = WorkspaceDocument(masses, {k: list(v) for k, v in variables.items()})
    validate(doc)
    return doc


def validate(doc: WorkspaceDocument) -> None:
    if not doc.masses:
        raise ValidationError("no outcomes", "masses")
    for i, m in enumerate(doc.masses):
        if m < 0:
            raise ValidationError(f"negative mass {m}", f"masses[{i}]")
    total = sum(doc.masses)
    if total != 1:
        raise ValidationError(f"masses sum to {total}, not 1", "masses")
    for name, labels in doc.variables.items():
        if len(labels) != len(doc.masses):
            raise ValidationError(f"{len(labels)} labels for {len(doc.masses)} outcomes", f"variables.{name}")


def serialize_workspace(doc: WorkspaceDocument) -> str:
    data = {
        "masses": [str(m) for m in doc.masses],
        "variables": {k: list(v) for k, v in doc.variables.items()},
    }
    return json.dumps(data, indent=2) + "\n"


def load_workspace(path: str) -> WorkspaceDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise ParseError(f"{path} is not UTF-8") from None
    return parse_workspace(text)
