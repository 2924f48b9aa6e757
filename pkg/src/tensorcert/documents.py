"""Reading and writing decomposition documents.

A document is a JSON object::

    {"field": "rational", "kind": "general",
     "factors": [[[1, 2], [3, "1/2"]], ...]}

    {"field": "float", "kind": "symmetric", "degree": 4,
     "weights": [1, 1], "points": [[...], ...], "epsilon": 1e-12}

    {"field": "rational", "kind": "points", "points": [[...], ...]}

Rational entries are JSON integers or ``"p/q"`` strings; JSON floats are
only accepted when ``field`` is ``"float"``. Matrices are lists of rows.
"""
from __future__ import annotations

import json
import math
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import jsonschema

from .linalg import DEFAULT_EPSILON, ScalarMode

EPSILON_ENV = "TENSORCERT_EPSILON"

_scalar = {
    "anyOf": [
        {"type": "integer"},
        {"type": "number"},
        {"type": "string", "pattern": r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$"},
    ]
}
_matrix = {"type": "array", "minItems": 1, "items": {"type": "array", "minItems": 1, "items": _scalar}}

SCHEMA = {
    "type": "object",
    "required": ["field", "kind"],
    "properties": {
        "field": {"enum": ["rational", "float"]},
        "kind": {"enum": ["general", "symmetric", "points"]},
        "factors": {"type": "array", "minItems": 1, "items": _matrix},
        "degree": {"type": "integer", "minimum": 1},
        "weights": {"type": "array", "minItems": 1, "items": _scalar},
        "points": _matrix,
        "epsilon": {"type": "number", "exclusiveMinimum": 0},
    },
    "allOf": [
        {"if": {"properties": {"kind": {"const": "general"}}},
         "then": {"required": ["factors"]}},
        {"if": {"properties": {"kind": {"const": "symmetric"}}},
         "then": {"required": ["degree", "weights", "points"]}},
        {"if": {"properties": {"kind": {"const": "points"}}},
         "then": {"required": ["points"]}},
    ],
}


class DocumentError(ValueError):
    """The input document is malformed."""


def _parse_scalar(x, field: str, where: str):
    if isinstance(x, bool):
        raise DocumentError(f"{where}: booleans are not numbers")
    if field == "rational":
        if isinstance(x, float):
            raise DocumentError(f"{where}: float {x!r} in a rational document; write it as 'p/q'")
        try:
            value = Fraction(re.sub(r"\s", "", x)) if isinstance(x, str) else Fraction(x)
        except ZeroDivisionError:
            raise DocumentError(f"{where}: zero denominator in {x!r}") from None
        return value
    if isinstance(x, str):
        try:
            return float(Fraction(re.sub(r"\s", "", x)))
        except ZeroDivisionError:
            raise DocumentError(f"{where}: zero denominator in {x!r}") from None
    if not math.isfinite(x):
        raise DocumentError(f"{where}: non-finite value {x!r}")
    return float(x)


def _parse_matrix(rows, field: str, where: str) -> list[list]:
    width = len(rows[0])
    out = []
    for i, row in enumerate(rows):
        if len(row) != width:
            raise DocumentError(f"{where}: row {i} has {len(row)} entries, expected {width}")
        out.append([_parse_scalar(x, field, f"{where}[{i}][{j}]") for j, x in enumerate(row)])
    return out


def _dump_scalar(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def _dump_matrix(M):
    return [[_dump_scalar(x) for x in row] for row in M]


@dataclass
class DecompositionFile:
    field: str
    kind: str
    factors: list | None = None
    degree: int | None = None
    weights: list | None = None
    points: list | None = None
    epsilon: float | None = None

    @classmethod
    def from_dict(cls, data) -> "DecompositionFile":
        try:
            jsonschema.validate(data, SCHEMA)
        except jsonschema.ValidationError as exc:
            loc = "/".join(str(p) for p in exc.absolute_path) or "document"
            raise DocumentError(f"{loc}: {exc.message}") from None
        field = data["field"]
        doc = cls(field=field, kind=data["kind"], epsilon=data.get("epsilon"))
        if doc.kind == "general":
            doc.factors = [
                _parse_matrix(F, field, f"factors[{k}]") for k, F in enumerate(data["factors"])
            ]
            counts = {len(F[0]) for F in doc.factors}
            if len(counts) != 1:
                raise DocumentError(f"factor matrices have differing column counts {sorted(counts)}")
        else:
            doc.points = _parse_matrix(data["points"], field, "points")
        if doc.kind == "symmetric":
            doc.degree = data["degree"]
            doc.weights = [_parse_scalar(w, field, f"weights[{i}]") for i, w in enumerate(data["weights"])]
            if len(doc.weights) != len(doc.points[0]):
                raise DocumentError(
                    f"{len(doc.weights)} weights for {len(doc.points[0])} points"
                )
        return doc

    @classmethod
    def loads(cls, text: str) -> "DecompositionFile":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"not valid JSON: {exc}") from None
        return cls.from_dict(data)

    @classmethod
    def load(cls, path) -> "DecompositionFile":
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
        return cls.loads(text)

    def to_dict(self) -> dict:
        out = {"field": self.field, "kind": self.kind}
        if self.factors is not None:
            out["factors"] = [_dump_matrix(F) for F in self.factors]
        if self.degree is not None:
            out["degree"] = self.degree
        if self.weights is not None:
            out["weights"] = [_dump_scalar(w) for w in self.weights]
        if self.points is not None:
            out["points"] = _dump_matrix(self.points)
        if self.epsilon is not None:
            out["epsilon"] = self.epsilon
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def scalar_mode(self, kind: str | None = None, epsilon: float | None = None) -> ScalarMode:
        """Resolve the scalar mode: explicit arguments, then the document, then the environment."""
        if kind is None:
            kind = "exact" if self.field == "rational" else "float"
        if kind == "exact":
            if self.field == "float":
                raise DocumentError("exact mode needs a rational document")
            return ScalarMode("exact")
        if epsilon is None:
            epsilon = self.epsilon
        if epsilon is None and os.environ.get(EPSILON_ENV):
            try:
                epsilon = float(os.environ[EPSILON_ENV])
            except ValueError:
                raise DocumentError(f"{EPSILON_ENV} is not a number") from None
        if epsilon is None:
            epsilon = DEFAULT_EPSILON
        try:
            return ScalarMode("float", epsilon)
        except ValueError as exc:
            raise DocumentError(str(exc)) from None
