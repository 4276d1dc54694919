# Integer-coordinate versions of the kernel predicates, for inner loops.
from math import gcd


def cross(p, q, r):
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def between(a, b, p):
    """p on the open segment (ab); a != b assumed."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    ex, ey = p[0] - a[0], p[1] - a[1]
    if dx * ey - dy * ex:
        return False
    t = ex * dx + ey * dy
    return 0 < t < dx * dx + dy * dy


def in_closed_triangle(a, b, c, p):
    """Closed membership in a non-degenerate triangle."""
    d1, d2, d3 = cross(a, b, p), cross(b, c, p), cross(c, a, p)
    return not ((d1 < 0 or d2 < 0 or d3 < 0) and (d1 > 0 or d2 > 0 or d3 > 0))


def direction(p, q):
    """Primitive integer direction from p to q and the step multiplier."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    g = gcd(dx, dy)
    return (dx // g, dy // g), g


def line_key(p, q):
    """Primitive direction up to sign, so both orientations of a line agree."""
    (dx, dy), _ = direction(p, q)
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    return dx, dy
