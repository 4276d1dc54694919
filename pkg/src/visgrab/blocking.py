"""Color-empty sets, k-color-blocking, triangle-instance classification and
hexagon blocker counting."""
from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from . import _intgeom as ig
from .errors import InvalidInput
from .geometry import (Point, check_distinct, convex_hull, cross, integer_coords,
                       line_intersection, point_in_convex_hull, points as _points,
                       strictly_between)
from .visibility import ColoredPointSet, visible_sets


class LemmaViolationWarning(UserWarning):
    """A verified blocking matched none of the reference instances."""


@dataclass(frozen=True)
class BlockTarget:
    """A unicolored target U, e.g. a triangle, quadrilateral or hexagon."""

    U: tuple[Point, ...]
    u_color: int

    def __init__(self, U, u_color: int):
        pts = tuple(_points(U))
        if len(pts) < 3:
            raise InvalidInput("a block target needs at least 3 points")
        check_distinct(pts)
        object.__setattr__(self, "U", pts)
        object.__setattr__(self, "u_color", int(u_color))

    @property
    def convex(self) -> bool:
        """All points are hull vertices, listed counterclockwise."""
        hull = convex_hull(self.U)
        if len(hull) != len(self.U):
            return False
        start = hull.index(0)
        return hull[start:] + hull[:start] == list(range(len(self.U)))

    def as_pointset(self, k: int = 0) -> ColoredPointSet:
        return ColoredPointSet(self.U, (self.u_color,) * len(self.U), max(k, self.u_color + 1))

    def pairs(self) -> list[tuple[int, int]]:
        return list(combinations(range(len(self.U)), 2))


class Reason(str, enum.Enum):
    B_OUTSIDE_HULL = "B_OUTSIDE_HULL"
    B_MEETS_U = "B_MEETS_U"
    NOT_PROPER = "NOT_PROPER"
    TOO_MANY_COLORS = "TOO_MANY_COLORS"
    OK = "OK"


@dataclass(frozen=True)
class BlockingReport:
    valid: bool
    reason: Reason
    colors_used_in_B: int
    unblocked_pairs: tuple[tuple[int, int], ...] = ()
    violation: Optional[tuple[int, int]] = field(default=None, compare=False)


def is_color_empty(U: Sequence[int], X: ColoredPointSet) -> bool:
    """No point of U's color lies in conv(U) outside U (closed hull)."""
    U = list(U)
    if not U:
        raise InvalidInput("empty index set")
    c = X.colors[U[0]]
    if any(X.colors[i] != c for i in U):
        raise InvalidInput("U is not unicolored")
    hull_pts = [X.points[i] for i in U]
    members = set(U)
    return not any(X.colors[j] == c and point_in_convex_hull(X.points[j], hull_pts)
                   for j in range(len(X)) if j not in members)


def _inside_hull_int(hull_ic, p) -> bool:
    n = len(hull_ic)
    if n == 1:
        return p == hull_ic[0]
    if n == 2:
        return p in hull_ic or ig.between(hull_ic[0], hull_ic[1], p)
    return all(ig.cross(hull_ic[i], hull_ic[(i + 1) % n], p) >= 0 for i in range(n))


def is_k_color_blocked(target: BlockTarget, B: ColoredPointSet, k: int,
                       allow_outside: bool = False) -> BlockingReport:
    """Check that B (k colors at most, inside conv(U) minus U) makes U + B properly colored.

    Failures are reported in order: placement, proper coloring, color count.
    ``unblocked_pairs`` lists every pair of U that still sees each other.
    ``allow_outside`` drops the placement requirement, for arguments that
    reason about points beyond the hull.
    """
    if target.u_color in B.colors:
        raise InvalidInput(f"blocker uses the target color {target.u_color}")
    nU = len(target.U)
    allpts = list(target.U) + list(B.points)
    ic = integer_coords(allpts)
    hull = [ic[i] for i in convex_hull(target.U)]
    n_colors = len(set(B.colors))

    uset = set(target.U)
    reason = None
    for b, p in zip(B.points, ic[nU:]):
        if b in uset:
            reason = Reason.B_MEETS_U
            break
        if not allow_outside and not _inside_hull_int(hull, p):
            reason = Reason.B_OUTSIDE_HULL
            break
    if reason is not None:
        return BlockingReport(False, reason, n_colors)

    check_distinct(allpts)
    cols = [target.u_color] * nU + list(B.colors)
    seen = visible_sets(ic)
    unblocked = tuple((i, j) for i, j in combinations(range(nU), 2) if j in seen[i])
    violation = None
    for i in range(len(ic)):
        for j in sorted(seen[i]):
            if j > i and cols[i] == cols[j]:
                violation = (i, j)
                break
        if violation:
            break
    if violation is not None:
        return BlockingReport(False, Reason.NOT_PROPER, n_colors, unblocked, violation)
    if n_colors > k:
        return BlockingReport(False, Reason.TOO_MANY_COLORS, n_colors, unblocked)
    return BlockingReport(True, Reason.OK, n_colors, unblocked)


def split_target(X: ColoredPointSet, U_idx: Sequence[int]) -> tuple[BlockTarget, ColoredPointSet]:
    """Separate a combined configuration into its target and the rest."""
    U_idx = list(U_idx)
    rest = [i for i in range(len(X)) if i not in set(U_idx)]
    c = X.colors[U_idx[0]]
    return BlockTarget([X.points[i] for i in U_idx], c), X.subset(rest)


def classify_triangle_blocking(target: BlockTarget, B: ColoredPointSet,
                               strict: bool = False) -> Optional[int]:
    """Which of the five reference instances U + B is equivalent to.

    Hull-membership equivalence against the reference realizations is tried
    first. Several instances have more than one hull-membership class, so
    unless ``strict`` a second pass compares the blocking structure alone
    (betweenness facts and the same-color relation). None means no match; a
    LemmaViolationWarning is emitted in that case.
    """
    from .equivalence import are_equivalent
    from .figures import triangle_instance

    if len(target.U) != 3 or cross(*target.U) == 0:
        raise InvalidInput("target is not a triangle")
    report = is_k_color_blocked(target, B, 3)
    if not report.valid:
        raise InvalidInput(f"not a valid 3-color blocking ({report.reason.value})")
    X = target.as_pointset(max(B.k, 4)).union(ColoredPointSet(B.points, B.colors, max(B.k, 4)))
    refs = {i: triangle_instance(i) for i in range(1, 6)}
    sizes = {i: len(r) for i, r in refs.items()}
    modes = ("hull",) if strict else ("hull", "betweenness")
    for mode in modes:
        for i, ref in refs.items():
            if sizes[i] == len(X) and are_equivalent(X, ref, mode) is not None:
                return i
    warnings.warn(f"3-color blocking of a triangle with |B|={len(B)} matches no reference instance",
                  LemmaViolationWarning, stacklevel=2)
    return None


# ---------------------------------------------------------------- hexagons

def _check_convex_polygon(H) -> list[Point]:
    pts = _points(H)
    T = BlockTarget(pts, 0)
    if not T.convex:
        raise InvalidInput("polygon is not strictly convex in counterclockwise order")
    return pts


def diagonals(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i, j in combinations(range(n), 2) if j - i not in (1, n - 1)]


def main_diagonals_concurrent(H) -> bool:
    pts = _check_convex_polygon(H)
    if len(pts) != 6:
        raise InvalidInput("expected a hexagon")
    p = line_intersection(pts[0], pts[3], pts[1], pts[4])
    return p is not None and cross(pts[2], pts[5], p) == 0


def hexagon_blocker_lower_bound(H) -> int:
    """6 edge blockers plus 4 for the diagonals if the long diagonals meet in
    one point, else 5 (no point then lies on more than two diagonals)."""
    return 10 if main_diagonals_concurrent(H) else 11


def _breakpoints(a: Point, b: Point, segs) -> list[Point]:
    """Points of segment ab where membership in other segments can change."""
    pts = {a, b}
    for c, d in segs:
        if cross(a, b, c) == 0 and cross(a, b, d) == 0:
            pts.update(q for q in (c, d) if strictly_between(a, b, q))
            continue
        p = line_intersection(a, b, c, d)
        if p is not None and strictly_between(a, b, p):
            pts.add(p)
    return sorted(pts, key=lambda q: (q.x - a.x) * (b.x - a.x) + (q.y - a.y) * (b.y - a.y))


def min_segment_blockers(segments: Sequence[tuple[Point, Point]]) -> tuple[int, list[Point]]:
    """Fewest points meeting every open segment, with a witness.

    Along one segment the set of segments through a point only changes at
    crossings and at endpoints of collinear overlapping segments, so those
    breakpoints and the midpoints between consecutive ones are enough as
    candidates. Exact set cover by branching on the first uncovered segment.
    """
    segs = [(Point(*a), Point(*b)) for a, b in segments]
    m = len(segs)
    cand: dict[Point, int] = {}
    for a, b in segs:
        bp = _breakpoints(a, b, segs)
        here = bp[1:-1] + [Point((p.x + q.x) / 2, (p.y + q.y) / 2) for p, q in zip(bp, bp[1:])]
        for p in here:
            if p in cand:
                continue
            mask = 0
            for s, (c, d) in enumerate(segs):
                if strictly_between(c, d, p):
                    mask |= 1 << s
            cand[p] = mask
    # drop candidates whose coverage is contained in another's
    by_mask: dict[int, Point] = {}
    for p, mask in cand.items():
        if mask not in by_mask or p < by_mask[mask]:
            by_mask[mask] = p
    masks = list(by_mask)
    cand = {p: mk for mk, p in by_mask.items()
            if not any(o != mk and o & mk == mk for o in masks)}
    items = sorted(cand.items(), key=lambda kv: (-bin(kv[1]).count("1"), kv[0]))
    full = (1 << m) - 1
    best: list = [None]

    def solve(covered: int, chosen: list):
        if best[0] is not None and len(chosen) >= len(best[0]):
            return
        if covered == full:
            best[0] = list(chosen)
            return
        s = ((~covered) & -(~covered)).bit_length() - 1
        for p, mask in items:
            if mask >> s & 1:
                chosen.append(p)
                solve(covered | mask, chosen)
                chosen.pop()

    solve(0, [])
    return len(best[0]), best[0]


def min_diagonal_blockers(H) -> tuple[int, list[Point]]:
    pts = _check_convex_polygon(H)
    return min_segment_blockers([(pts[i], pts[j]) for i, j in diagonals(len(pts))])
