"""Proper-coloring checks and exact chromatic numbers of visibility graphs."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InvalidInput
from .visibility import ColoredPointSet, VisibilityGraph, visibility_graph


@dataclass(frozen=True)
class ProperColoringReport:
    proper: bool
    violation: Optional[tuple[int, int]] = None


@dataclass(frozen=True)
class ChromaticResult:
    chi: int
    witness_coloring: tuple[int, ...]
    lower_bound_certificate: tuple[int, ...]


def is_properly_colored(X: ColoredPointSet, graph: VisibilityGraph | None = None) -> ProperColoringReport:
    """Same-colored points must not see each other; reports the first offending pair."""
    G = graph if graph is not None else visibility_graph(X)
    cols = X.colors
    for u, v in G.edges():  # row-major, so lexicographic
        if cols[u] == cols[v]:
            return ProperColoringReport(False, (u, v))
    return ProperColoringReport(True)


def _popcount(m: int) -> int:
    return bin(m).count("1")


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def max_clique(G: VisibilityGraph) -> tuple[int, ...]:
    """A maximum clique, smallest-index-first among equals (plain branch and bound)."""
    return clique_of_bitsets(G.bitsets())


def clique_of_bitsets(nbr: list[int]) -> tuple[int, ...]:
    best: list[int] = []

    def expand(R: list[int], P: int):
        nonlocal best
        if not P:
            if len(R) > len(best):
                best = list(R)
            return
        while P:
            if len(R) + _popcount(P) <= len(best):
                return
            v = (P & -P).bit_length() - 1
            R.append(v)
            expand(R, P & nbr[v])
            R.pop()
            P &= ~(1 << v)

    expand([], (1 << len(nbr)) - 1)
    return tuple(best)


def _dsatur_order_pick(uncolored: int, sat: list[int], deg: list[int]) -> int:
    best_v, best_key = -1, None
    for v in _bits(uncolored):
        key = (_popcount(sat[v]), deg[v])
        if best_key is None or key > best_key:
            best_v, best_key = v, key
    return best_v


def dsatur_greedy(G: VisibilityGraph) -> tuple[int, ...]:
    """Greedy DSATUR coloring; an upper bound for chi."""
    nbr = G.bitsets()
    deg = [_popcount(m) for m in nbr]
    colors = [-1] * G.n
    sat = [0] * G.n
    uncolored = (1 << G.n) - 1
    while uncolored:
        v = _dsatur_order_pick(uncolored, sat, deg)
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        uncolored &= ~(1 << v)
        for w in _bits(nbr[v]):
            sat[w] |= 1 << c
    return tuple(colors)


def k_colorable(G: VisibilityGraph, k: int, clique: tuple[int, ...] | None = None
                ) -> Optional[tuple[int, ...]]:
    """A proper coloring with colors 0..k-1, or None when none exists.

    Backtracking in DSATUR order. A clique is precolored 0, 1, ... to break
    color symmetry, and a vertex only ever opens the lowest unused color.
    """
    if k < 1:
        raise InvalidInput("k must be at least 1")
    return color_bitsets(G.bitsets(), k, clique)


def color_bitsets(nbr: list[int], k: int, clique: tuple[int, ...] | None = None
                  ) -> Optional[tuple[int, ...]]:
    """k_colorable on neighborhood bitmasks."""
    n = len(nbr)
    if n == 0:
        return ()
    if clique is None:
        clique = clique_of_bitsets(nbr)
    if len(clique) > k:
        return None
    deg = [_popcount(m) for m in nbr]
    colors = [-1] * n
    # sat_count[v][c] = number of colored neighbors of v with color c
    sat_count = [[0] * k for _ in range(n)]
    sat = [0] * n
    uncolored = (1 << n) - 1

    def assign(v, c):
        nonlocal uncolored
        colors[v] = c
        uncolored &= ~(1 << v)
        for w in _bits(nbr[v]):
            sat_count[w][c] += 1
            sat[w] |= 1 << c

    def unassign(v, c):
        nonlocal uncolored
        colors[v] = -1
        uncolored |= 1 << v
        for w in _bits(nbr[v]):
            sat_count[w][c] -= 1
            if not sat_count[w][c]:
                sat[w] &= ~(1 << c)

    for c, v in enumerate(clique):
        assign(v, c)

    def solve(used: int) -> bool:
        if not uncolored:
            return True
        v = _dsatur_order_pick(uncolored, sat, deg)
        for c in range(min(used + 1, k)):
            if sat[v] >> c & 1:
                continue
            assign(v, c)
            if solve(max(used, c + 1)):
                return True
            unassign(v, c)
        return False

    if solve(len(clique)):
        return tuple(colors)
    return None


def chromatic_number(G: VisibilityGraph) -> ChromaticResult:
    if G.n < 1:
        raise InvalidInput("chromatic number of an empty graph")
    clique = max_clique(G)
    greedy = dsatur_greedy(G)
    upper = max(greedy) + 1
    for k in range(len(clique), upper):
        col = k_colorable(G, k, clique)
        if col is not None:
            return ChromaticResult(k, col, clique)
    return ChromaticResult(upper, greedy, clique)


def apply_coloring(X, coloring) -> ColoredPointSet:
    """Push a coloring of the visibility graph back onto the point set."""
    pts = X.points if isinstance(X, ColoredPointSet) else X
    k = max(coloring) + 1 if coloring else 1
    return ColoredPointSet(tuple(pts), tuple(coloring), k)
