import random
from fractions import Fraction as F
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from visgrab.blocking import min_diagonal_blockers
from visgrab.empty_polygon import (EmptyKgonWitness, all_empty_convex_kgons, find_empty_convex_kgon,
                                   forces_large_class, horton_set, largest_class_lower_bound,
                                   mc35_upper_bound, mono_empty_hexagon, verify_empty_kgon)
from visgrab.errors import InvalidInput
from visgrab.figures import HEXAGON, twelve_integer
from visgrab.geometry import Point, convex_hull
from visgrab.visibility import ColoredPointSet, max_collinear


def general_position(r, n, lo=0, hi=40):
    pts = []
    while len(pts) < n:
        p = Point(r.randint(lo, hi), r.randint(lo, hi))
        if p in pts or max_collinear(pts + [p]) > 2:
            continue
        pts.append(p)
    return pts


def test_square_with_center_examples():
    S = [(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)]
    w = find_empty_convex_kgon(S, 4)
    assert w is not None and verify_empty_kgon(S, w)
    assert 4 in w.indices
    assert find_empty_convex_kgon(S, 5) is None
    assert len(all_empty_convex_kgons(S, 3)) > 0


def test_small_or_degenerate_inputs():
    assert find_empty_convex_kgon([(0, 0), (1, 0), (0, 1)], 4) is None
    with pytest.raises(InvalidInput):
        find_empty_convex_kgon([(0, 0), (1, 0), (2, 0), (0, 1)], 4)
    with pytest.raises(InvalidInput):
        find_empty_convex_kgon([(0, 0), (1, 0), (0, 1)], 2)
    with pytest.raises(InvalidInput):
        find_empty_convex_kgon([(0, 0), (1, 0), (0, 1)], 3, method="nope")
    # triangles tolerate collinear triples
    w = find_empty_convex_kgon([(0, 0), (1, 0), (2, 0), (0, 1)], 3)
    assert w is not None and verify_empty_kgon([(0, 0), (1, 0), (2, 0), (0, 1)], w)


def test_verifier_rejects_bad_witnesses():
    S = [(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)]
    assert not verify_empty_kgon(S, EmptyKgonWitness((0, 1, 2, 3)))  # (2,1) inside
    assert not verify_empty_kgon(S, EmptyKgonWitness((0, 3, 2)))  # clockwise
    assert not verify_empty_kgon(S, EmptyKgonWitness((0, 0, 1)))


def test_every_five_points_have_an_empty_quadrilateral():
    r = random.Random(41)
    for _ in range(1000):
        S = general_position(r, 5, 0, 30)
        w = find_empty_convex_kgon(S, 4)
        assert w is not None and verify_empty_kgon(S, w)


def test_dp_agrees_with_exhaustive():
    r = random.Random(42)
    for _ in range(120):
        n = r.randint(5, 14)
        S = general_position(r, n, 0, 25)
        for k in (3, 4, 5, 6):
            a = find_empty_convex_kgon(S, k, method="exhaustive")
            b = find_empty_convex_kgon(S, k, method="dp")
            assert (a is None) == (b is None), (S, k)
            for w in (a, b):
                if w is not None:
                    assert len(w.indices) == k and verify_empty_kgon(S, w)


def test_exhaustive_listing_is_complete_on_small_sets():
    r = random.Random(43)
    for _ in range(40):
        S = general_position(r, 7, 0, 15)
        listed = {frozenset(w.indices) for w in all_empty_convex_kgons(S, 4)}
        for combo in combinations(range(7), 4):
            h = convex_hull([S[i] for i in combo])
            ok = len(h) == 4 and verify_empty_kgon(S, EmptyKgonWitness(tuple(combo[i] for i in h)))
            assert ok == (frozenset(combo) in listed)


def test_ten_points_contain_an_empty_pentagon():
    r = random.Random(44)
    for _ in range(100):
        S = general_position(r, 10, 0, 60)
        w = find_empty_convex_kgon(S, 5)
        assert w is not None and verify_empty_kgon(S, w)


def test_horton_sets():
    for n in (2, 4, 8, 16, 32):
        H = horton_set(n)
        assert len(H) == n and len(set(H)) == n and max_collinear(H) <= 2
    H16 = horton_set(16)
    assert find_empty_convex_kgon(H16, 7, method="exhaustive") is None
    assert find_empty_convex_kgon(horton_set(32), 7, method="dp") is None
    with pytest.raises(InvalidInput):
        horton_set(12)


def test_pigeonhole_bound():
    assert mc35_upper_bound(463) == 2310
    assert largest_class_lower_bound(2311, 5) == 463
    assert forces_large_class(2311, 463) and not forces_large_class(2310, 463)
    rng = np.random.default_rng(7)
    for _ in range(200):
        colors = rng.integers(0, 5, size=2311)
        assert np.bincount(colors, minlength=5).max() >= 463
    with pytest.raises(InvalidInput):
        mc35_upper_bound(0)


@given(st.integers(1, 500), st.integers(1, 9))
def test_pigeonhole_property(n, k):
    b = largest_class_lower_bound(n, k)
    assert (b - 1) * k < n <= b * k


def _blocked_hexagon():
    H = [Point(*p) for p in HEXAGON]
    t = F(1, 3)
    edge = [Point(H[i].x + t * (H[(i + 1) % 6].x - H[i].x), H[i].y + t * (H[(i + 1) % 6].y - H[i].y))
            for i in range(6)]
    _, diag = min_diagonal_blockers(HEXAGON)
    pts = H + edge + diag
    return ColoredPointSet(tuple(pts), tuple([0] * 6 + list(range(1, len(pts) - 5))), len(pts) - 5)


def test_mono_empty_hexagon():
    X = _blocked_hexagon()
    c, w = mono_empty_hexagon(X)
    assert c == 0 and sorted(w.indices) == list(range(6)) and verify_empty_kgon(list(X.points), w) is False
    # empty of its own color, though blockers of other colors sit inside
    assert verify_empty_kgon([X.points[i] for i in range(6)], EmptyKgonWitness(w.indices))
    assert mono_empty_hexagon(twelve_integer()) is None
    with pytest.raises(InvalidInput):
        mono_empty_hexagon(twelve_integer().recolored(1, 0))
