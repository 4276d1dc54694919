import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from visgrab.errors import InvalidInput
from visgrab.figures import twelve_integer
from visgrab.geometry import (Orientation, Point, as_rational, convex_hull, cross, integer_coords,
                              line_intersection, orient, point_in_convex_hull, strictly_between)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
points = st.builds(Point, rationals, rationals)
SQUARE = [Point(0, 0), Point(4, 0), Point(4, 4), Point(0, 4)]


def test_orient_examples():
    assert orient(Point(0, 0), Point(1, 0), Point(0, 1)) is Orientation.COUNTERCLOCKWISE
    assert orient(Point(0, 0), Point(1, 1), Point(2, 2)) is Orientation.COLLINEAR
    assert orient(Point(0, 0), Point(0, 1), Point(1, 0)) is Orientation.CLOCKWISE
    # duplicates are allowed and collinear
    assert orient(Point(1, 1), Point(1, 1), Point(3, 2)) is Orientation.COLLINEAR


def test_orient_antisymmetric_and_cyclic_random():
    r = random.Random(2024)
    for _ in range(1000):
        p, q, s = (Point(Fraction(r.randint(-50, 50), r.randint(1, 9)),
                         Fraction(r.randint(-50, 50), r.randint(1, 9))) for _ in range(3))
        assert orient(p, q, s) == -orient(p, s, q)
        assert orient(p, q, s) == orient(q, s, p) == orient(s, p, q)


@given(points, points, points)
def test_orient_is_sign_of_cross(p, q, s):
    c = cross(p, q, s)
    assert int(orient(p, q, s)) == (c > 0) - (c < 0)


def test_strictly_between_examples():
    a, b = Point(0, 0), Point(2, 0)
    assert strictly_between(a, b, Point(1, 0))
    assert not strictly_between(a, b, Point(2, 0))
    assert not strictly_between(a, b, Point(1, 1))
    with pytest.raises(InvalidInput):
        strictly_between(a, a, Point(1, 0))


@given(points, points, points)
def test_between_implies_collinear_and_not_endpoint(a, b, p):
    if a == b:
        return
    if strictly_between(a, b, p):
        assert orient(a, b, p) is Orientation.COLLINEAR
        assert p not in (a, b)


@given(points, points, st.fractions(min_value=0, max_value=1, max_denominator=20))
def test_points_on_segment_are_between(a, b, t):
    if a == b:
        return
    p = Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
    assert strictly_between(a, b, p) == (0 < t < 1)


def test_hull_examples():
    pts = SQUARE + [Point(2, 2)]
    assert convex_hull(pts) == [0, 1, 2, 3]
    assert convex_hull([Point(0, 0), Point(1, 0), Point(2, 0)]) == [0, 2]
    X = twelve_integer()
    hull = [X.points[i] for i in convex_hull(X.points)]
    assert hull == [Point(-2, 2), Point(-1, -2), Point(3, -1), Point(2, 3)]


def test_hull_rejects_duplicates_and_empty():
    with pytest.raises(InvalidInput):
        convex_hull([Point(0, 0), Point(0, 0)])
    with pytest.raises(InvalidInput):
        convex_hull([])


def _brute_hull(pts):
    """Extreme points: those not in the closed hull of the others."""
    return {i for i, p in enumerate(pts)
            if not point_in_convex_hull(p, [q for j, q in enumerate(pts) if j != i])}


@given(st.lists(points, min_size=1, max_size=9, unique=True))
def test_hull_is_convex_ccw_and_matches_extreme_points(pts):
    hull = convex_hull(pts)
    assert pts[hull[0]] == min(pts)
    if len(hull) >= 3:
        for i in range(len(hull)):
            a, b, c = (pts[hull[(i + d) % len(hull)]] for d in range(3))
            assert orient(a, b, c) is Orientation.COUNTERCLOCKWISE
    if len(pts) > 1:
        assert set(hull) == _brute_hull(pts)


def test_point_in_hull_examples():
    assert point_in_convex_hull(Point(2, 2), SQUARE, strict=True)
    assert not point_in_convex_hull(Point(0, 0), SQUARE, strict=True)
    assert point_in_convex_hull(Point(0, 0), SQUARE, strict=False)
    assert not point_in_convex_hull(Point(5, 5), SQUARE)
    assert point_in_convex_hull(Point(2, 0), SQUARE)
    assert not point_in_convex_hull(Point(2, 0), SQUARE, strict=True)


def _halfplane_oracle(p, S, strict):
    """Membership through the half-planes of all hull edges."""
    hull = [S[i] for i in convex_hull(S)]
    if len(hull) == 1:
        return not strict and p == hull[0]
    if len(hull) == 2:
        a, b = hull
        return not strict and (p in (a, b) or strictly_between(a, b, p))
    signs = [cross(hull[i], hull[(i + 1) % len(hull)], p) for i in range(len(hull))]
    return all(s > 0 for s in signs) if strict else all(s >= 0 for s in signs)


def test_point_in_hull_matches_halfplane_oracle_on_grid():
    r = random.Random(7)
    grid = [Point(x, y) for x in range(5) for y in range(5)]
    for _ in range(250):
        S = r.sample(grid, r.randint(1, 8))
        for p in grid:
            for strict in (False, True):
                assert point_in_convex_hull(p, S, strict) == _halfplane_oracle(p, S, strict), (p, S)


def test_as_rational_rules():
    assert as_rational("1.7") == Fraction(17, 10)
    assert as_rational("5/3") == Fraction(5, 3)
    assert as_rational(-2) == -2
    for bad in (0.5, True, "x", "1/0", None):
        with pytest.raises(InvalidInput):
            as_rational(bad)


def test_point_order_and_value_equality():
    assert Point("1/2", 0) == Point(Fraction(2, 4), "0.0")
    assert sorted([Point(1, 0), Point(0, 5), Point(0, 1)]) == [Point(0, 1), Point(0, 5), Point(1, 0)]


def test_line_intersection_and_integer_coords():
    assert line_intersection(Point(0, 0), Point(2, 2), Point(0, 2), Point(2, 0)) == Point(1, 1)
    assert line_intersection(Point(0, 0), Point(1, 0), Point(0, 1), Point(1, 1)) is None
    ic = integer_coords([Point("1/2", "1/3"), Point(1, 0)])
    assert ic == [(3, 2), (6, 0)]


@given(st.lists(points, min_size=3, max_size=6, unique=True))
def test_integer_coords_preserve_orientation(pts):
    ic = integer_coords(pts)
    for i, j, k in combinations(range(len(pts)), 3):
        c = (ic[j][0] - ic[i][0]) * (ic[k][1] - ic[i][1]) - (ic[j][1] - ic[i][1]) * (ic[k][0] - ic[i][0])
        assert (c > 0) - (c < 0) == int(orient(pts[i], pts[j], pts[k]))
