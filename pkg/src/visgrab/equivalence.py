"""Equivalence of colored point sets.

Two sets are equivalent when some bijection preserves every convex-hull
membership fact ``x0 in conv{x1..xk}`` in both directions and the same-color
relation (color names may change). In the plane membership in the hull of a
finite set is decided by its subsets of size at most three, so the pair
(betweenness) and triple (closed triangle) facts carry everything.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from . import _intgeom as ig
from .geometry import integer_coords
from .visibility import ColoredPointSet


@dataclass(frozen=True)
class CombinatorialSignature:
    n: int
    betweenness: frozenset  # (middle, a, b) with a < b
    in_triangle: frozenset  # (p, a, b, c) with a < b < c, p in closed conv{a, b, c}
    class_sizes: tuple[int, ...]
    same_color: frozenset  # index pairs (i, j), i < j, sharing a color
    _masks: dict = field(default=None, repr=False, compare=False)

    def point_invariants(self) -> list[tuple]:
        roles = [[0, 0, 0, 0] for _ in range(self.n)]
        for m, a, b in self.betweenness:
            roles[m][0] += 1
            roles[a][1] += 1
            roles[b][1] += 1
        for p, a, b, c in self.in_triangle:
            roles[p][2] += 1
            for v in (a, b, c):
                roles[v][3] += 1
        partner = [0] * self.n
        for i, j in self.same_color:
            partner[i] += 1
            partner[j] += 1
        return [(partner[i],) + tuple(roles[i]) for i in range(self.n)]

    def canonical(self) -> tuple:
        """Relabeling-invariant summary; unequal summaries rule out equivalence."""
        return (self.n, self.class_sizes, len(self.betweenness), len(self.in_triangle),
                tuple(sorted(self.point_invariants())))


def signature(X: ColoredPointSet, relations: str = "hull") -> CombinatorialSignature:
    """Betweenness and closed-triangle facts plus the color partition.

    ``relations="betweenness"`` drops the triangle facts, leaving only who
    blocks whom; that coarser structure is used by triangle-blocking
    classification as a fallback.
    """
    if relations not in ("hull", "betweenness"):
        raise ValueError(f"unknown relation set {relations!r}")
    ic = integer_coords(X.points)
    n = len(ic)
    masks: dict[tuple, int] = {}
    between = set()
    for a, b in combinations(range(n), 2):
        m = 0
        for p in range(n):
            if p != a and p != b and ig.between(ic[a], ic[b], ic[p]):
                between.add((p, a, b))
                m |= 1 << p
        masks[(a, b)] = m
    tri = set()
    for a, b, c in combinations(range(n), 3) if relations == "hull" else ():
        m = 0
        degenerate = ig.cross(ic[a], ic[b], ic[c]) == 0
        for p in range(n):
            if p in (a, b, c):
                continue
            if degenerate:
                inside = (masks[(a, b)] | masks[(b, c)] | masks[(a, c)]) >> p & 1
            else:
                inside = ig.in_closed_triangle(ic[a], ic[b], ic[c], ic[p])
            if inside:
                tri.add((p, a, b, c))
                m |= 1 << p
        masks[(a, b, c)] = m
    classes = X.color_classes()
    same = frozenset((i, j) for i, j in combinations(range(n), 2) if X.colors[i] == X.colors[j])
    return CombinatorialSignature(n, frozenset(between), frozenset(tri),
                                  tuple(sorted(len(v) for v in classes.values())),
                                  same, masks)


def are_equivalent(X: ColoredPointSet, Y: ColoredPointSet,
                   relations: str = "hull") -> Optional[tuple[int, ...]]:
    """A bijection ``phi`` (``phi[i]`` indexes Y) witnessing equivalence, else None."""
    sx, sy = signature(X, relations), signature(Y, relations)
    hull = relations == "hull"
    if sx.canonical() != sy.canonical():
        return None
    n = sx.n
    if n == 0:
        return ()
    inv_x, inv_y = sx.point_invariants(), sy.point_invariants()
    by_inv: dict[tuple, list[int]] = {}
    for j, key in enumerate(inv_y):
        by_inv.setdefault(key, []).append(j)
    order = sorted(range(n), key=lambda i: (len(by_inv[inv_x[i]]), i))
    mx, my = sx._masks, sy._masks
    cx, cy = X.colors, Y.colors

    def key(*idx):
        return tuple(sorted(idx))

    phi = [-1] * n
    used = [False] * n
    cmap: dict[int, int] = {}
    cinv: dict[int, int] = {}
    placed: list[int] = []

    def consistent(x: int) -> bool:
        fx = phi[x]
        # subsets T containing x, tested against every placed point outside T
        for a in placed:
            tx, ty = mx[key(x, a)], my[key(fx, phi[a])]
            for p in placed:
                if p != a and (tx >> p & 1) != (ty >> phi[p] & 1):
                    return False
        for a, b in combinations(placed, 2):
            # x itself inside the pair {a, b}
            if (mx[key(a, b)] >> x & 1) != (my[key(phi[a], phi[b])] >> fx & 1):
                return False
            if not hull:
                continue
            tx, ty = mx[key(x, a, b)], my[key(fx, phi[a], phi[b])]
            for p in placed:
                if p != a and p != b and (tx >> p & 1) != (ty >> phi[p] & 1):
                    return False
        for a, b, c in combinations(placed, 3) if hull else ():
            if (mx[key(a, b, c)] >> x & 1) != (my[key(phi[a], phi[b], phi[c])] >> fx & 1):
                return False
        return True

    def solve(depth: int) -> bool:
        if depth == n:
            return True
        x = order[depth]
        for y in by_inv[inv_x[x]]:
            if used[y]:
                continue
            c_from, c_to = cx[x], cy[y]
            if cmap.get(c_from, c_to) != c_to or cinv.get(c_to, c_from) != c_from:
                continue
            fresh = c_from not in cmap
            if fresh:
                cmap[c_from], cinv[c_to] = c_to, c_from
            phi[x], used[y] = y, True
            if consistent(x):
                placed.append(x)
                if solve(depth + 1):
                    return True
                placed.pop()
            phi[x], used[y] = -1, False
            if fresh:
                del cmap[c_from], cinv[c_to]
        return False

    if solve(0):
        return tuple(phi)
    return None


def mirror(X: ColoredPointSet) -> ColoredPointSet:
    """Reflection in the y-axis."""
    return ColoredPointSet(tuple(type(p)(-p.x, p.y) for p in X.points), X.colors, X.k, X.names)
