"""Instance documents: a small JSON dialect with exact rational coordinates.

Coordinates are integers or strings ``"p/q"``; floats are rejected so that
every document denotes exact points.  :func:`serialize` writes the canonical
form (fixed field order, rationals in lowest terms, one vertex or simplex per
line, LF endings), so ``serialize(parse(text)) == text`` for canonical text.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError, ValidationError

__all__ = ["Instance", "parse", "serialize", "load", "dump", "format_rational"]

FIELDS = ("dimension", "n", "signed", "orientable", "vertices", "simplices", "labels", "polytope", "points", "note")
REQUIRED = ("dimension", "n", "signed", "vertices", "simplices", "labels")

_RATIONAL = re.compile(r"-?\d+(/\d+)?")


@dataclass(frozen=True)
class Instance:
    dimension: int
    n: int
    signed: bool
    vertices: tuple
    simplices: tuple
    labels: tuple
    orientable: bool = True
    polytope: tuple | None = None
    points: tuple | None = None
    note: str | None = None

    @classmethod
    def from_objects(cls, T, lab, *, polytope=None, points=None, note=None) -> "Instance":
        from .labelling import SignedLabelling

        return cls(
            T.dimension,
            lab.n,
            isinstance(lab, SignedLabelling),
            tuple(tuple(p) for p in T.vertices),
            tuple(T.simplices),
            tuple(lab.labels),
            T.orientable,
            None if polytope is None else tuple(tuple(p) for p in polytope),
            None if points is None else tuple(tuple(p) for p in points),
            note,
        )

    def triangulation(self):
        from .complex import build_triangulation

        return build_triangulation(self.dimension, self.vertices, self.simplices, orientable=self.orientable)

    def labelling(self):
        from .labelling import Labelling, SignedLabelling

        return (SignedLabelling if self.signed else Labelling)(self.n, self.labels)

    def polytope_obj(self):
        from .cover import make_polytope

        return None if self.polytope is None else make_polytope(self.polytope)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f'"{x.numerator}/{x.denominator}"'


def _point(p) -> str:
    return "[" + ", ".join(format_rational(c) for c in p) + "]"


def _block(name, rows, last) -> str:
    if not rows:
        return f'  "{name}": []' + ("" if last else ",")
    body = ",\n".join("    " + r for r in rows)
    return f'  "{name}": [\n{body}\n  ]' + ("" if last else ",")


def serialize(doc: Instance) -> str:
    parts = [
        f'  "dimension": {doc.dimension},',
        f'  "n": {doc.n},',
        f'  "signed": {"true" if doc.signed else "false"},',
    ]
    if not doc.orientable:
        parts.append('  "orientable": false,')
    tail = [("vertices", [_point(p) for p in doc.vertices])]
    tail.append(("simplices", ["[" + ", ".join(str(v) for v in s) + "]" for s in doc.simplices]))
    tail.append(("labels", None))
    if doc.polytope is not None:
        tail.append(("polytope", [_point(p) for p in doc.polytope]))
    if doc.points is not None:
        tail.append(("points", [_point(p) for p in doc.points]))
    if doc.note is not None:
        tail.append(("note", None))
    for k, (name, rows) in enumerate(tail):
        last = k == len(tail) - 1
        if name == "labels":
            parts.append('  "labels": [' + ", ".join(str(x) for x in doc.labels) + "]" + ("" if last else ","))
        elif name == "note":
            parts.append('  "note": ' + json.dumps(doc.note, ensure_ascii=False) + ("" if last else ","))
        else:
            parts.append(_block(name, rows, last))
    return "{\n" + "\n".join(parts) + "\n}\n"


def _line_col(text: str, pos: int):
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


_TOKEN = re.compile(r'"(?:[^"\\]|\\.)*"|-?\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|-?\.\d+')


def _find_float(text: str):
    for m in _TOKEN.finditer(text):
        tok = m.group()
        if tok.startswith('"'):
            continue
        if any(c in tok for c in ".eE"):
            return tok, m.start()
    return None


class _FloatSeen(Exception):
    pass


def _no_float(_tok):
    raise _FloatSeen


def parse(text: str) -> Instance:
    """Parse and validate a document; all violations are reported together."""
    if text.startswith("﻿"):
        text = text[1:]
    try:
        raw = json.loads(text, parse_float=_no_float, parse_constant=_no_float)
    except _FloatSeen:
        hit = _find_float(text)
        line, col = _line_col(text, hit[1]) if hit else (None, None)
        tok = hit[0] if hit else "a non-integer number"
        raise ParseError(f"floating point number {tok} is not allowed; write rationals as \"p/q\"", line, col) from None
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return _validate(raw)


def _rational(x, where, errs):
    if isinstance(x, bool):
        errs.append(f"{where}: booleans are not coordinates")
        return None
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str) and _RATIONAL.fullmatch(x.strip()):
        num, _, den = x.strip().partition("/")
        if den and int(den) == 0:
            errs.append(f"{where}: zero denominator in {x!r}")
            return None
        return Fraction(int(num), int(den or 1))
    errs.append(f"{where}: {x!r} is not an integer or a \"p/q\" string")
    return None


def _points(raw, name, dim, errs):
    if not isinstance(raw, list):
        errs.append(f"{name}: expected an array")
        return ()
    out = []
    for i, p in enumerate(raw):
        if not isinstance(p, list):
            errs.append(f"{name}[{i}]: expected an array of coordinates")
            continue
        if isinstance(dim, int) and len(p) < dim:
            errs.append(f"{name}[{i}]: has {len(p)} coordinates, fewer than the dimension {dim}")
        coords = [_rational(c, f"{name}[{i}][{k}]", errs) for k, c in enumerate(p)]
        out.append(tuple(coords))
    if out and len({len(p) for p in out}) > 1:
        errs.append(f"{name}: points have differing numbers of coordinates")
    return tuple(out)


def _int(raw, name, errs, minimum=None):
    if isinstance(raw, bool) or not isinstance(raw, int):
        errs.append(f"{name}: expected an integer, got {raw!r}")
        return None
    if minimum is not None and raw < minimum:
        errs.append(f"{name}: must be at least {minimum}, got {raw}")
    return raw


def _validate(raw) -> Instance:
    errs: list[str] = []
    if not isinstance(raw, dict):
        raise ValidationError(["document must be a JSON object"])
    for k in raw:
        if k not in FIELDS:
            errs.append(f"unknown field {k!r}")
    for k in REQUIRED:
        if k not in raw:
            errs.append(f"missing field {k!r}")
    if errs and any(e.startswith("missing") for e in errs):
        raise ValidationError(errs)

    dim = _int(raw["dimension"], "dimension", errs, 1)
    n = _int(raw["n"], "n", errs, 1)
    signed = raw["signed"]
    if not isinstance(signed, bool):
        errs.append(f"signed: expected true or false, got {signed!r}")
    orientable = raw.get("orientable", True)
    if not isinstance(orientable, bool):
        errs.append(f"orientable: expected true or false, got {orientable!r}")
    vertices = _points(raw["vertices"], "vertices", dim, errs)

    simplices = []
    if not isinstance(raw["simplices"], list):
        errs.append("simplices: expected an array")
    else:
        for i, s in enumerate(raw["simplices"]):
            if not isinstance(s, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in s):
                errs.append(f"simplices[{i}]: expected an array of vertex indices")
                continue
            if isinstance(dim, int) and len(s) != dim + 1:
                errs.append(f"simplices[{i}]: has {len(s)} vertices, expected {dim + 1}")
            for v in s:
                if not 0 <= v < len(vertices):
                    errs.append(f"simplices[{i}]: vertex index {v} out of range")
            simplices.append(tuple(s))

    labels = []
    if not isinstance(raw["labels"], list):
        errs.append("labels: expected an array")
    else:
        if len(raw["labels"]) != len(vertices):
            errs.append(f"labels: has {len(raw['labels'])} entries for {len(vertices)} vertices")
        for i, x in enumerate(raw["labels"]):
            if isinstance(x, bool) or not isinstance(x, int):
                errs.append(f"labels[{i}]: expected an integer, got {x!r}")
                continue
            if isinstance(n, int) and isinstance(signed, bool):
                if signed and (x == 0 or abs(x) > n):
                    errs.append(f"labels[{i}]: {x} is outside +-1..+-{n}")
                if not signed and not 1 <= x <= n:
                    errs.append(f"labels[{i}]: {x} is outside 1..{n}")
            labels.append(x)

    polytope = None
    if "polytope" in raw:
        polytope = _points(raw["polytope"], "polytope", dim, errs)
    points = None
    if "points" in raw:
        points = _points(raw["points"], "points", dim, errs)
    note = raw.get("note")
    if note is not None and not isinstance(note, str):
        errs.append("note: expected a string")
    if errs:
        raise ValidationError(errs)
    return Instance(dim, n, signed, vertices, tuple(simplices), tuple(labels), orientable, polytope, points, note)


def load(path) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def dump(doc: Instance, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize(doc))
