import random
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from visgrab.errors import InvalidInput
from visgrab.figures import twelve_integer
from visgrab.geometry import Point, strictly_between
from visgrab.visibility import (ColoredPointSet, VisibilityGraph, blockers, collinear_lines,
                                max_collinear, visibility_graph)

small = st.integers(-5, 5)
point_lists = st.lists(st.tuples(small, small), min_size=1, max_size=9, unique=True)


def idx(X, xy):
    return X.points.index(Point(*xy))


def test_three_collinear_is_a_path():
    G = visibility_graph([(0, 0), (1, 0), (2, 0)])
    assert G.edges() == [(0, 1), (1, 2)]


def test_general_position_is_complete():
    G = visibility_graph([(0, 0), (3, 1), (1, 4), (-2, 2)])
    assert len(G.edges()) == 6


def test_twelve_point_blocked_pairs():
    X = twelve_integer()
    G = visibility_graph(X)
    assert not G.has_edge(idx(X, (0, 0)), idx(X, (2, 0)))
    assert blockers(X, idx(X, (1, 2)), idx(X, (-1, -2))) == [idx(X, (0, 0))]
    assert max_collinear(X) == 3


def test_blockers_in_segment_order():
    pts = [(3, 0), (1, 0), (0, 0), (2, 0)]
    assert blockers(pts, 2, 0) == [1, 3]
    assert blockers(pts, 0, 2) == [3, 1]
    assert blockers(pts, 1, 3) == []
    with pytest.raises(InvalidInput):
        blockers(pts, 1, 1)


def test_max_collinear_examples():
    assert max_collinear([(x, y) for x in range(3) for y in range(3)]) == 3
    assert max_collinear([(0, 0), (5, 1)]) == 2
    assert max_collinear([(0, 0)]) == 1


def _brute_max_collinear(pts):
    P = [Point(*p) for p in pts]
    best = min(len(P), 2)
    for a, b in combinations(P, 2):
        on = 2 + sum(1 for c in P if c not in (a, b) and
                     (b.x - a.x) * (c.y - a.y) == (b.y - a.y) * (c.x - a.x))
        best = max(best, on)
    return best


@given(point_lists)
def test_max_collinear_matches_brute_force(pts):
    assert max_collinear(pts) == _brute_max_collinear(pts)


@given(point_lists)
def test_graph_symmetric_irreflexive_and_blocker_consistent(pts):
    G = visibility_graph(pts)
    A = G.adjacency
    assert (A == A.T).all() and not A.diagonal().any()
    for u, v in combinations(range(len(pts)), 2):
        bl = blockers(pts, u, v)
        assert G.has_edge(u, v) == (not bl)
        P = [Point(*p) for p in pts]
        assert bl == sorted((w for w in range(len(P)) if strictly_between(P[u], P[v], P[w])),
                            key=lambda w: abs(P[w].x - P[u].x) + abs(P[w].y - P[u].y))


@given(point_lists)
def test_general_position_gives_complete_graph(pts):
    if max_collinear(pts) <= 2:
        n = len(pts)
        assert len(visibility_graph(pts).edges()) == n * (n - 1) // 2


@given(point_lists, st.data())
def test_inserting_a_blocker_removes_the_edge(pts, data):
    if len(pts) < 2:
        return
    u, v = data.draw(st.lists(st.sampled_from(range(len(pts))), min_size=2, max_size=2, unique=True))
    a, b = Point(*pts[u]), Point(*pts[v])
    t = Fraction(data.draw(st.integers(1, 49)), 50)
    m = Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
    P = [Point(*p) for p in pts]
    if m in P:
        return
    assert not visibility_graph(P + [m]).has_edge(u, v)


def test_colored_point_set_invariants():
    X = ColoredPointSet.from_coords([(0, 0), (1, 0)], [0, 2])
    assert X.k == 3
    with pytest.raises(InvalidInput):
        ColoredPointSet.from_coords([(0, 0), (0, 0)], [0, 1])
    with pytest.raises(InvalidInput):
        ColoredPointSet.from_coords([(0, 0), (1, 0)], [0, 2], k=2)
    assert X.color_classes() == {0: [0], 2: [1]}
    assert X.recolored(1, 0).colors == (0, 0)


def test_graph_helpers():
    G = VisibilityGraph.from_edges(4, [(0, 1), (1, 2)])
    assert G.neighbors(1) == [0, 2] and G.degree(3) == 0
    assert G.bitsets() == [0b10, 0b101, 0b10, 0]
    assert G == VisibilityGraph(4, G.adjacency.copy())
    with pytest.raises(InvalidInput):
        VisibilityGraph.from_edges(2, [(1, 1)])


def test_collinear_lines_of_twelve_point_set():
    X = twelve_integer()
    lines = collinear_lines(X)
    assert lines and all(len(L) == 3 for L in lines)
    # every same-colored pair of the figure is blocked along one of these lines
    for c, members in X.color_classes().items():
        for u, v in combinations(members, 2):
            assert any(u in L and v in L for L in lines)
