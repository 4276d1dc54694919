"""Exact predicates on homogeneous integer points (X, Y, W), W > 0.

Search loops mix grid points with line intersections of growing
denominators; keeping (X, Y, W) triples avoids Fraction overhead.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .geometry import Point


def norm(X: int, Y: int, W: int):
    if W < 0:
        X, Y, W = -X, -Y, -W
    g = gcd(gcd(X, Y), W)
    return (X // g, Y // g, W // g)


def from_point(p: Point):
    d = p.x.denominator * p.y.denominator // gcd(p.x.denominator, p.y.denominator)
    return (p.x.numerator * (d // p.x.denominator), p.y.numerator * (d // p.y.denominator), d)


def to_point(h) -> Point:
    return Point(Fraction(h[0], h[2]), Fraction(h[1], h[2]))


def det(a, b, c) -> int:
    """Positive iff a, b, c turn counterclockwise."""
    return (a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def line(a, b):
    """Line through two points as a primitive integer triple, sign-normalized."""
    L = (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])
    g = gcd(gcd(L[0], L[1]), L[2])
    L = (L[0] // g, L[1] // g, L[2] // g)
    if L[0] < 0 or (L[0] == 0 and L[1] < 0):
        L = (-L[0], -L[1], -L[2])
    return L


def meet(L, M):
    X = L[1] * M[2] - L[2] * M[1]
    Y = L[2] * M[0] - L[0] * M[2]
    W = L[0] * M[1] - L[1] * M[0]
    if W == 0:
        return None
    return norm(X, Y, W)


def ray(q, p):
    """Primitive direction from q to p and the distance along it, as a pair
    (g, w) standing for g / w up to a factor depending on q only."""
    dx = p[0] * q[2] - q[0] * p[2]
    dy = p[1] * q[2] - q[1] * p[2]
    g = gcd(dx, dy)
    return (dx // g, dy // g), (g, p[2])


def closer(s, t) -> bool:
    """Compare two ``ray`` distances."""
    return s[0] * t[1] < t[0] * s[1]


def undirected(d):
    return d if d[0] > 0 or (d[0] == 0 and d[1] > 0) else (-d[0], -d[1])


def between(a, b, p) -> bool:
    """p strictly inside the segment ab."""
    if det(a, b, p) != 0:
        return False
    ux, uy = p[0] * a[2] - a[0] * p[2], p[1] * a[2] - a[1] * p[2]
    vx, vy = b[0] * p[2] - p[0] * b[2], b[1] * p[2] - p[1] * b[2]
    return ux * vx + uy * vy > 0


def hull(pts):
    """Counterclockwise hull vertices (collinear boundary points dropped)."""
    order = sorted(set(pts), key=lambda h: (Fraction(h[0], h[2]), Fraction(h[1], h[2])))
    if len(order) <= 2:
        return order

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and det(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lo, up = chain(order), chain(order[::-1])
    return lo[:-1] + up[:-1]


def in_closed_hull(H, p) -> bool:
    """Membership in the closed hull given by ``hull`` output."""
    if not H:
        return False
    if len(H) == 1:
        return p == H[0]
    if len(H) == 2:
        return p in H or between(H[0], H[1], p)
    return all(det(H[i - 1], H[i], p) >= 0 for i in range(len(H)))


def visible_sets(pts) -> list[set[int]]:
    """For each point, the indices it sees (nearest point along every ray)."""
    n = len(pts)
    out = []
    for i in range(n):
        near: dict = {}
        q = pts[i]
        for j in range(n):
            if j == i:
                continue
            d, t = ray(q, pts[j])
            cur = near.get(d)
            if cur is None or closer(t, cur[0]):
                near[d] = (t, j)
        out.append({j for _, j in near.values()})
    return out


def max_on_line_through(q, pts) -> int:
    """Largest number of points of ``pts`` on one line through q (q excluded)."""
    counts: dict = {}
    for p in pts:
        dx = p[0] * q[2] - q[0] * p[2]
        dy = p[1] * q[2] - q[1] * p[2]
        g = gcd(dx, dy)
        d = undirected((dx // g, dy // g))
        counts[d] = counts.get(d, 0) + 1
    return max(counts.values(), default=0)
