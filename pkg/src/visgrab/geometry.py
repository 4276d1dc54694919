"""Exact planar predicates over rationals.

Coordinates are :class:`fractions.Fraction` values, so every decision below is
exact. Floats only ever appear in SVG output.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidInput

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and numeric strings ("5/3", "1.7", "-2") to a Fraction.

    Floats are rejected: their binary expansion is almost never the number the
    caller meant.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidInput(f"not a rational literal: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"not a rational literal: {value!r}") from exc
    raise InvalidInput(f"not a rational literal: {value!r} ({type(value).__name__})")


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __init__(self, x, y):
        object.__setattr__(self, "x", as_rational(x))
        object.__setattr__(self, "y", as_rational(y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self):
        return f"Point({_fmt(self.x)}, {_fmt(self.y)})"

    def __sub__(self, other: "Point"):
        return (self.x - other.x, self.y - other.y)


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def points(coords: Iterable) -> list[Point]:
    """Build a list of points from ``(x, y)`` pairs."""
    return [p if isinstance(p, Point) else Point(*p) for p in coords]


class Orientation(enum.IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


def cross(p: Point, q: Point, r: Point) -> Fraction:
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def orient(p: Point, q: Point, r: Point) -> Orientation:
    c = cross(p, q, r)
    return Orientation((c > 0) - (c < 0))


def strictly_between(a: Point, b: Point, p: Point) -> bool:
    """True iff ``p`` lies on the open segment ``(ab)``."""
    if a == b:
        raise InvalidInput("segment endpoints coincide")
    if cross(a, b, p) != 0:
        return False
    dx, dy = b.x - a.x, b.y - a.y
    t = (p.x - a.x) * dx + (p.y - a.y) * dy
    return 0 < t < dx * dx + dy * dy


def on_closed_segment(a: Point, b: Point, p: Point) -> bool:
    return p == a or p == b or (a != b and strictly_between(a, b, p))


def in_closed_triangle(a: Point, b: Point, c: Point, p: Point) -> bool:
    """Closed membership of ``p`` in conv{a, b, c}; degenerate triangles allowed."""
    d1, d2, d3 = cross(a, b, p), cross(b, c, p), cross(c, a, p)
    if cross(a, b, c) == 0:
        return (on_closed_segment(a, b, p) or on_closed_segment(b, c, p)
                or on_closed_segment(a, c, p))
    has_neg = d1 < 0 or d2 < 0 or d3 < 0
    has_pos = d1 > 0 or d2 > 0 or d3 > 0
    return not (has_neg and has_pos)


def check_distinct(pts: Sequence[Point]) -> None:
    seen = {}
    for i, p in enumerate(pts):
        if p in seen:
            raise InvalidInput(f"duplicate point {p!r} at indices {seen[p]} and {i}")
        seen[p] = i


def convex_hull(pts: Sequence[Point]) -> list[int]:
    """Indices of the hull vertices, counterclockwise from the lexicographic minimum.

    Boundary points that are not extreme are left out. Two or more collinear
    points give the two endpoints.
    """
    if not pts:
        raise InvalidInput("convex hull of an empty set")
    check_distinct(pts)
    order = sorted(range(len(pts)), key=lambda i: pts[i])
    if len(order) == 1:
        return order

    def chain(idx):
        out: list[int] = []
        for i in idx:
            while len(out) >= 2 and cross(pts[out[-2]], pts[out[-1]], pts[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(reversed(order))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def point_in_convex_hull(p: Point, S: Sequence[Point], strict: bool = False) -> bool:
    """Exact membership of ``p`` in conv(S); the interior when ``strict``.

    Closed membership reduces (Carathéodory) to: ``p`` is a point of S, lies on
    a segment between two of them, or in a triangle of three of them. The
    interior is empty unless S spans the plane; when it does, ``p`` is interior
    iff it is strictly left of every counterclockwise hull edge.
    """
    S = list(S)
    if not S:
        raise InvalidInput("empty point set")
    if strict:
        uniq = sorted(set(S))
        hull = [uniq[i] for i in convex_hull(uniq)]
        if len(hull) < 3:
            return False
        return all(cross(hull[i], hull[(i + 1) % len(hull)], p) > 0
                   for i in range(len(hull)))
    if p in S:
        return True
    for a, b in combinations(S, 2):
        if a != b and strictly_between(a, b, p):
            return True
    for a, b, c in combinations(S, 3):
        if cross(a, b, c) != 0 and in_closed_triangle(a, b, c, p):
            return True
    return False


def line_intersection(a: Point, b: Point, c: Point, d: Point) -> Point | None:
    """Intersection point of lines ab and cd, or None if parallel (or identical)."""
    r = (b.x - a.x, b.y - a.y)
    s = (d.x - c.x, d.y - c.y)
    den = r[0] * s[1] - r[1] * s[0]
    if den == 0:
        return None
    t = ((c.x - a.x) * s[1] - (c.y - a.y) * s[0]) / den
    return Point(a.x + t * r[0], a.y + t * r[1])


def integer_coords(pts: Sequence[Point]) -> list[tuple[int, int]]:
    """Scale all points by the lcm of their denominators.

    Every predicate in this module is invariant under positive scaling, so the
    hot loops elsewhere run on plain ints.
    """
    den = 1
    for p in pts:
        den = math.lcm(den, p.x.denominator, p.y.denominator)
    return [(int(p.x * den), int(p.y * den)) for p in pts]
