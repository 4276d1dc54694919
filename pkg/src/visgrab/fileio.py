"""Plain-text point sets and JSON reports.

A point-set file holds one point per line, ``x y color [name]``, with x and y
written as integers, fractions ("5/3") or decimals ("1.7", read exactly as
17/10). Lines starting with ``#`` are comments; ``# k N`` and ``# ell N``
set the palette size and the collinearity bound, ``# visgrab N`` the format
version.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .errors import InvalidInput, ParseError
from .geometry import Point, as_rational
from .visibility import ColoredPointSet

FORMAT_VERSION = 1


@dataclass(frozen=True)
class ConfigFile:
    pointset: ColoredPointSet
    version: int = FORMAT_VERSION
    ell: Optional[int] = None

    @property
    def k(self) -> int:
        return self.pointset.k


def _header_int(value: str, lineno: int, key: str) -> int:
    try:
        v = int(value)
    except ValueError:
        raise ParseError(f"{key} must be an integer, got {value!r}", lineno) from None
    if v < 1:
        raise ParseError(f"{key} must be positive", lineno)
    return v


def parse(text: str) -> ConfigFile:
    """Read a point-set file; errors carry the 1-based line number."""
    version, k, ell = FORMAT_VERSION, None, None
    pts: list[Point] = []
    colors: list[int] = []
    names: list[str] = []
    first_line: dict[Point, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            words = line[1:].split()
            if len(words) == 2 and words[0] in ("k", "ell", "visgrab"):
                v = _header_int(words[1], lineno, words[0])
                if words[0] == "k":
                    k = v
                elif words[0] == "ell":
                    ell = v
                else:
                    version = v
                    if v != FORMAT_VERSION:
                        raise ParseError(f"unsupported format version {v}", lineno)
            continue
        fields = line.split()
        if len(fields) not in (3, 4):
            raise ParseError(f"expected 'x y color [name]', got {len(fields)} fields", lineno)
        try:
            p = Point(as_rational(fields[0]), as_rational(fields[1]))
        except InvalidInput as exc:
            raise ParseError(str(exc), lineno) from None
        try:
            c = int(fields[2])
        except ValueError:
            raise ParseError(f"color must be a non-negative integer, got {fields[2]!r}", lineno) from None
        if c < 0 or (k is not None and c >= k):
            raise ParseError(f"color {c} out of range" + (f" for k={k}" if k else ""), lineno)
        if p in first_line:
            raise ParseError(f"duplicate point {p} (first on line {first_line[p]})", lineno)
        first_line[p] = lineno
        pts.append(p)
        colors.append(c)
        names.append(fields[3] if len(fields) == 4 else "")
    if not pts:
        raise ParseError("no points")
    X = ColoredPointSet(tuple(pts), tuple(colors), k or 0,
                        tuple(names) if any(names) else None)
    return ConfigFile(X, version, ell)


def _literal(q: Fraction) -> str:
    return str(q)


def serialize(X: ColoredPointSet, ell: Optional[int] = None) -> str:
    """Inverse of parse: parse(serialize(X)).pointset == X, in input order."""
    out = [f"# visgrab {FORMAT_VERSION}", f"# k {X.k}"]
    if ell is not None:
        out.append(f"# ell {ell}")
    for i, (p, c) in enumerate(zip(X.points, X.colors)):
        row = f"{_literal(p.x)} {_literal(p.y)} {c}"
        name = X.names[i] if X.names else ""
        if name:
            if any(ch.isspace() for ch in name) or name.startswith("#"):
                raise InvalidInput(f"point name {name!r} cannot be written")
            row += f" {name}"
        out.append(row)
    return "\n".join(out) + "\n"


def read_pointset(path) -> ConfigFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"not UTF-8: {exc}") from None
    return parse(text)


def write_pointset(path, X: ColoredPointSet, ell: Optional[int] = None) -> None:
    Path(path).write_text(serialize(X, ell), encoding="utf-8")


def dumps(obj) -> str:
    """Deterministic JSON (sorted keys, exact rationals as strings)."""
    def default(o):
        if isinstance(o, Fraction):
            return str(o)
        if isinstance(o, Point):
            return [str(o.x), str(o.y)]
        raise TypeError(f"cannot serialize {type(o).__name__}")

    return json.dumps(obj, sort_keys=True, indent=2, default=default)


def error_object(kind: str, message: str, line: Optional[int] = None) -> dict:
    err = {"error": kind, "message": message}
    if line is not None:
        err["line"] = line
    return err
