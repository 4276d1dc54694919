"""Empty convex k-gons, Horton sets and the five-color pigeonhole bound."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations
from typing import Optional, Sequence

from . import _intgeom as ig
from .coloring import is_properly_colored
from .errors import InvalidInput
from .geometry import Point, check_distinct, integer_coords, points as _points
from .visibility import ColoredPointSet, max_collinear


@dataclass(frozen=True)
class EmptyKgonWitness:
    indices: tuple[int, ...]  # counterclockwise
    host: str = ""


def _ccw_hull(ic, idx):
    """Hull of the given indices, counterclockwise; collinear boundary points dropped."""
    order = sorted(idx, key=lambda i: ic[i])

    def chain(seq):
        out = []
        for i in seq:
            while len(out) >= 2 and ig.cross(ic[out[-2]], ic[out[-1]], ic[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lo, up = chain(order), chain(reversed(order))
    return lo[:-1] + up[:-1]


def _polygon_is_empty(ic, poly, others) -> bool:
    m = len(poly)
    for j in others:
        p = ic[j]
        if all(ig.cross(ic[poly[i]], ic[poly[(i + 1) % m]], p) >= 0 for i in range(m)):
            return False
    return True


def _exhaustive(ic, k, find_all=False):
    n = len(ic)
    found = []
    for combo in combinations(range(n), k):
        hull = _ccw_hull(ic, combo)
        if len(hull) != k:
            continue
        chosen = set(combo)
        if _polygon_is_empty(ic, hull, [j for j in range(n) if j not in chosen]):
            if not find_all:
                return [tuple(hull)]
            found.append(tuple(hull))
    return found


def _fan_dp(ic, k):
    """Empty convex k-gon by dynamic programming over each possible lowest vertex.

    With p the lowest vertex, the other vertices sorted by angle around p form
    a convex chain whose fan triangles (p, q_a, q_b) are empty; general
    position assumed.
    """
    n = len(ic)
    by_height = sorted(range(n), key=lambda i: (ic[i][1], ic[i][0]))
    rank = {v: r for r, v in enumerate(by_height)}
    for pi in by_height:
        p = ic[pi]
        Q = [j for j in range(n) if rank[j] > rank[pi]]
        if len(Q) < k - 1:
            continue
        Q.sort(key=cmp_to_key(lambda a, b: -ig.cross(p, ic[a], ic[b])))
        m = len(Q)
        q = [ic[j] for j in Q]

        def fan_empty(a, b):
            return not any(ig.in_closed_triangle(p, q[a], q[b], q[t]) for t in range(a + 1, b))

        dp: dict[tuple[int, int], dict[int, int]] = {}
        for c in range(m):
            for b in range(c):
                if not fan_empty(b, c):
                    continue
                cell = {3: -1}
                for a in range(b):
                    prev = dp.get((a, b))
                    if not prev or ig.cross(q[a], q[b], q[c]) <= 0:
                        continue
                    for length in prev:
                        if length + 1 <= k and length + 1 not in cell:
                            cell[length + 1] = a
                dp[(b, c)] = cell
                if k in cell and ig.cross(q[b], q[c], p) > 0:
                    chain = [c, b]
                    length, a = k, cell[k]
                    while a != -1:
                        chain.append(a)
                        length -= 1
                        a = dp[(chain[-1], chain[-2])][length]
                    return tuple([pi] + [Q[t] for t in reversed(chain)])
    return None


def find_empty_convex_kgon(S: Sequence, k: int, method: str = "auto",
                           host: str = "") -> Optional[EmptyKgonWitness]:
    """An empty convex k-gon of S (no other point of S in its closed hull), or None.

    ``method`` is "exhaustive" (first k-subset in lexicographic order),
    "dp" (fan dynamic program) or "auto" (exhaustive up to 20 points).
    """
    pts = _points(S)
    if k < 3:
        raise InvalidInput("k must be at least 3")
    check_distinct(pts)
    if len(pts) < k:
        return None
    if k >= 4 and max_collinear(pts) > 2:
        raise InvalidInput("point set is not in general position")
    ic = integer_coords(pts)
    if method == "auto":
        method = "exhaustive" if len(pts) <= 20 else "dp"
    if method == "exhaustive":
        hits = _exhaustive(ic, k)
        poly = hits[0] if hits else None
    elif method == "dp":
        if k == 3 and max_collinear(pts) > 2:
            hits = _exhaustive(ic, k)
            poly = hits[0] if hits else None
        else:
            poly = _fan_dp(ic, k)
    else:
        raise InvalidInput(f"unknown method {method!r}")
    return None if poly is None else EmptyKgonWitness(tuple(poly), host)


def all_empty_convex_kgons(S: Sequence, k: int) -> list[EmptyKgonWitness]:
    """Every empty convex k-gon, by exhaustive subset scan (small inputs only)."""
    ic = integer_coords(_points(S))
    return [EmptyKgonWitness(h) for h in _exhaustive(ic, k, find_all=True)]


def verify_empty_kgon(S: Sequence, witness: EmptyKgonWitness) -> bool:
    """Independent check: consecutive triples turn left and nothing else is inside."""
    from .geometry import Orientation, orient, point_in_convex_hull
    pts = _points(S)
    poly = [pts[i] for i in witness.indices]
    m = len(poly)
    if m < 3 or len(set(witness.indices)) != m:
        return False
    if any(orient(poly[i], poly[(i + 1) % m], poly[(i + 2) % m]) != Orientation.COUNTERCLOCKWISE
           for i in range(m)):
        return False
    chosen = set(witness.indices)
    return not any(point_in_convex_hull(pts[j], poly) for j in range(len(pts)) if j not in chosen)


def mono_empty_hexagon(X: ColoredPointSet) -> Optional[tuple[int, EmptyKgonWitness]]:
    """First color class (by color index) holding a hexagon empty of its own color."""
    if not is_properly_colored(X).proper:
        raise InvalidInput("point set is not properly colored")
    if max_collinear(X) > 3:
        raise InvalidInput("more than 3 collinear points")
    for c, idx in sorted(X.color_classes().items()):
        if len(idx) < 6:
            continue
        w = find_empty_convex_kgon([X.points[i] for i in idx], 6, host=f"class {c}")
        if w is not None:
            return c, EmptyKgonWitness(tuple(idx[i] for i in w.indices), f"class {c}")
    return None


def _dominates(low, high) -> bool:
    """Every point of ``high`` strictly above every line through two of ``low``,
    and every point of ``low`` strictly below every line through two of ``high``."""
    for a, b in combinations(low, 2):
        a, b = (a, b) if a[0] < b[0] else (b, a)
        if any(ig.cross(a, b, h) <= 0 for h in high):
            return False
    for a, b in combinations(high, 2):
        a, b = (a, b) if a[0] < b[0] else (b, a)
        if any(ig.cross(a, b, l) >= 0 for l in low):
            return False
    return True


def _horton_int(n: int) -> list[tuple[int, int]]:
    if n == 1:
        return [(0, 0)]
    half = _horton_int(n // 2)
    evens = [(2 * x, y) for x, y in half]
    odds = [(2 * x + 1, y) for x, y in half]
    lift = 1
    while not _dominates(evens, [(x, y + lift) for x, y in odds]):
        lift *= 2
    return sorted(evens + [(x, y + lift) for x, y in odds])


def horton_set(n: int) -> list[Point]:
    """Horton set of n points (n a power of two, 2..64), integer coordinates.

    Points with even rank in x form a Horton set, so do the odd ones, and the
    odd half is lifted (by doubling) until it lies high above the even half and
    the even half deep below it.
    """
    if n not in (2, 4, 8, 16, 32, 64):
        raise InvalidInput("n must be one of 2, 4, 8, 16, 32, 64")
    return [Point(x, y) for x, y in _horton_int(n)]


def mc35_upper_bound(h6: int) -> int:
    """Largest possible size of a properly 5-colored set with at most 3 collinear
    points, given that every h6 points in general position span an empty hexagon."""
    if h6 < 1:
        raise InvalidInput("h6 must be positive")
    return 5 * h6 - 5


def largest_class_lower_bound(n_points: int, n_colors: int) -> int:
    """Pigeonhole: some color class has at least ceil(n/k) points."""
    if n_colors < 1:
        raise InvalidInput("need at least one color")
    return -(-n_points // n_colors)


def forces_large_class(n_points: int, h6: int, n_colors: int = 5) -> bool:
    """True when every n_colors-coloring of n_points has a class of size >= h6."""
    return largest_class_lower_bound(n_points, n_colors) >= h6
