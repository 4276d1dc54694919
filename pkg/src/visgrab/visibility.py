"""Colored point sets, visibility graphs and collinearity counts."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from . import _intgeom as ig
from .errors import InvalidInput
from .geometry import Point, check_distinct, integer_coords, points as _points


@dataclass(frozen=True)
class ColoredPointSet:
    """Distinct points with a color index per point.

    ``k`` is the number of declared colors; when omitted it is one more than
    the largest index used.
    """

    points: tuple[Point, ...]
    colors: tuple[int, ...]
    k: int = 0
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        pts = tuple(_points(self.points))
        cols = tuple(int(c) for c in self.colors)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "colors", cols)
        if len(pts) != len(cols):
            raise InvalidInput(f"{len(pts)} points but {len(cols)} colors")
        check_distinct(pts)
        k = self.k or (max(cols) + 1 if cols else 1)
        if k < 1:
            raise InvalidInput("k must be at least 1")
        bad = [c for c in cols if not 0 <= c < k]
        if bad:
            raise InvalidInput(f"color index {bad[0]} outside 0..{k - 1}")
        object.__setattr__(self, "k", k)
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != len(pts):
                raise InvalidInput("names must match points one to one")
            object.__setattr__(self, "names", names)

    @classmethod
    def from_coords(cls, coords, colors, k=0, names=None) -> "ColoredPointSet":
        return cls(tuple(_points(coords)), tuple(colors), k, names)

    def __len__(self):
        return len(self.points)

    def color_classes(self) -> dict[int, list[int]]:
        classes: dict[int, list[int]] = {}
        for i, c in enumerate(self.colors):
            classes.setdefault(c, []).append(i)
        return classes

    def union(self, other: "ColoredPointSet") -> "ColoredPointSet":
        names = None
        if self.names is not None and other.names is not None:
            names = self.names + other.names
        return ColoredPointSet(self.points + other.points, self.colors + other.colors,
                               max(self.k, other.k), names)

    def subset(self, idx: Sequence[int]) -> "ColoredPointSet":
        idx = list(idx)
        names = None if self.names is None else tuple(self.names[i] for i in idx)
        return ColoredPointSet(tuple(self.points[i] for i in idx),
                               tuple(self.colors[i] for i in idx), self.k, names)

    def recolored(self, index: int, color: int) -> "ColoredPointSet":
        cols = list(self.colors)
        cols[index] = color
        return ColoredPointSet(self.points, tuple(cols), max(self.k, color + 1), self.names)


def _as_points(X) -> list[Point]:
    if isinstance(X, ColoredPointSet):
        return list(X.points)
    return _points(X)


@dataclass(frozen=True, eq=False)
class VisibilityGraph:
    n: int
    adjacency: np.ndarray  # (n, n) bool, symmetric, zero diagonal

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u, v])

    def neighbors(self, u: int) -> list[int]:
        return np.flatnonzero(self.adjacency[u]).tolist()

    def edges(self) -> list[tuple[int, int]]:
        iu, ju = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(iu.tolist(), ju.tolist()))

    def degree(self, u: int) -> int:
        return int(self.adjacency[u].sum())

    def bitsets(self) -> list[int]:
        """Neighborhoods as int bitmasks (bit j set iff j is adjacent)."""
        out = []
        for row in self.adjacency:
            m = 0
            for j in np.flatnonzero(row).tolist():
                m |= 1 << j
            out.append(m)
        return out

    def __eq__(self, other):
        return (isinstance(other, VisibilityGraph) and self.n == other.n
                and np.array_equal(self.adjacency, other.adjacency))

    @classmethod
    def from_edges(cls, n: int, edges) -> "VisibilityGraph":
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if u == v:
                raise InvalidInput("self-loop")
            adj[u, v] = adj[v, u] = True
        return cls(n, adj)


def visible_sets(icoords) -> list[set[int]]:
    """For each point, the indices it sees; integer coordinates in."""
    n = len(icoords)
    seen: list[set[int]] = [set() for _ in range(n)]
    for i, p in enumerate(icoords):
        nearest: dict[tuple[int, int], tuple[int, int]] = {}
        for j, q in enumerate(icoords):
            if j == i:
                continue
            d, g = ig.direction(p, q)
            best = nearest.get(d)
            if best is None or g < best[0]:
                nearest[d] = (g, j)
        seen[i] = {j for _, j in nearest.values()}
    return seen


def visibility_graph(X) -> VisibilityGraph:
    """u ~ v iff no point of X lies on the open segment (uv).

    Each point sees exactly the nearest other point along every direction, so
    the construction groups the others by primitive direction: O(n^2).
    """
    pts = _as_points(X)
    if not pts:
        raise InvalidInput("visibility graph of an empty set")
    check_distinct(pts)
    n = len(pts)
    adj = np.zeros((n, n), dtype=bool)
    for i, row in enumerate(visible_sets(integer_coords(pts))):
        for j in row:
            adj[i, j] = True
    return VisibilityGraph(n, adj)


def blockers(X, u: int, v: int) -> list[int]:
    """Indices strictly between u and v, ordered from u towards v."""
    if u == v:
        raise InvalidInput("blockers of a point with itself")
    pts = _as_points(X)
    ic = integer_coords(pts)
    a, b = ic[u], ic[v]
    hits = [i for i, p in enumerate(ic) if i not in (u, v) and ig.between(a, b, p)]
    dx, dy = b[0] - a[0], b[1] - a[1]
    return sorted(hits, key=lambda i: (ic[i][0] - a[0]) * dx + (ic[i][1] - a[1]) * dy)


def max_collinear(X) -> int:
    """Largest number of points of X on one line."""
    pts = _as_points(X)
    if not pts:
        raise InvalidInput("empty point set")
    check_distinct(pts)
    ic = integer_coords(pts)
    if len(ic) <= 2:
        return len(ic)
    best = 2
    for i, p in enumerate(ic):
        counts: dict[tuple[int, int], int] = {}
        for j in range(i + 1, len(ic)):
            key = ig.line_key(p, ic[j])
            counts[key] = counts.get(key, 0) + 1
        if counts:
            best = max(best, 1 + max(counts.values()))
    return best


def collinear_lines(X, min_points: int = 3) -> list[tuple[int, ...]]:
    """Maximal sets of at least ``min_points`` collinear points, as sorted index tuples."""
    pts = _as_points(X)
    ic = integer_coords(pts)
    lines = set()
    for i, j in combinations(range(len(ic)), 2):
        on = tuple(m for m in range(len(ic))
                   if m in (i, j) or ig.cross(ic[i], ic[j], ic[m]) == 0)
        if len(on) >= min_points:
            lines.add(on)
    return sorted(lines)
