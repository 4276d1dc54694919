"""Exact coordinates of the reference configurations.

Color indices follow one palette throughout: 0 red, 1 black, 2 blue, 3 green
(4 and up are extra colors for searches). Figures whose drawn coordinates
are rounded decimals are given here as exact rational realizations built on
the intended collinearities; everything is re-verified by the corpus loader.
"""
from fractions import Fraction as F

from .visibility import ColoredPointSet

RED, BLACK, BLUE, GREEN = 0, 1, 2, 3
PALETTE = ("red", "black", "blue", "green", "orange", "purple", "brown", "teal")

# Host triangle for the five triangle-blocking instances.
TRIANGLE = ((0, 0), (3, 0), (1, 2))


def _cps(rows, k=4, names=True):
    coords = [(x, y) for x, y, _, _ in rows]
    colors = [c for _, _, c, _ in rows]
    return ColoredPointSet.from_coords(coords, colors, k, [n for *_, n in rows] if names else None)


def twelve_integer() -> ColoredPointSet:
    """Integer 12-point set properly colored with 4 colors."""
    return _cps([
        (0, 0, RED, "A"), (1, 0, BLACK, "B"), (1, 1, BLUE, "C"), (0, 1, GREEN, "D"),
        (2, 0, RED, "A'"), (1, 2, BLACK, "B'"), (-1, 1, BLUE, "C'"), (0, -1, GREEN, "D'"),
        (-2, 2, RED, "A''"), (-1, -2, BLACK, "B''"), (3, -1, BLUE, "C''"), (2, 3, GREEN, "D''"),
    ])


def twelve_decimal() -> ColoredPointSet:
    """The decimal 12-point drawing, kept with its rounded coordinates (schematic, not exact)."""
    d = F
    return _cps([
        (4, 8, BLACK, "k1"), (10, 8, BLACK, "k2"), (d("7"), d("2.8"), BLACK, "k3"),
        (7, 8, GREEN, "g1"), (d("9.43"), d("3.8"), GREEN, "g2"), (d("-7.21"), d("-3.01"), GREEN, "g3"),
        (d("8.5"), d("5.4"), BLUE, "b1"), (d("3.65"), d("5.4"), BLUE, "b2"), (d("6.07"), d("23.21"), BLUE, "b3"),
        (d("5.5"), d("5.4"), RED, "r1"), (d("7.93"), d("9.61"), RED, "r2"), (d("22.14"), d("-1.4"), RED, "r3"),
    ])


# Pinwheel: b blocks a a', c blocks b b', a blocks c c'. Inner triangle picked
# near the drawing; a', b', c' are where the rays leave TRIANGLE.
_A = (F(9, 10), F(4, 5))
_B = (F(7, 5), F(1))
_C = (F(5, 4), F(1, 2))
_A1 = (F(64, 35), F(41, 35))
_B1 = (F(11, 10), F(0))
_C1 = (F(11, 20), F(11, 10))


def six_point() -> ColoredPointSet:
    """Properly 3-colored 6-point set with at most 3 collinear points."""
    return _cps([
        (*_A1, RED, "a'"), (*_B, BLUE, "b"), (*_B1, BLUE, "b'"),
        (*_C, GREEN, "c"), (*_C1, GREEN, "c'"), (*_A, RED, "a"),
    ])


def triangle_target():
    return [(x, y) for x, y in TRIANGLE]


def triangle_instance(i: int) -> ColoredPointSet:
    """Instance ``i`` (1..5): black TRIANGLE plus a 3-color blocking set."""
    T = [(x, y, BLACK, f"t{j}") for j, (x, y) in enumerate(TRIANGLE)]
    rows = {
        1: [(2, 1, RED, "s_right"), (F(4, 3), 0, BLUE, "s_bottom"), (F(3, 5), F(6, 5), GREEN, "s_left")],
        2: [(F(3, 5), F(6, 5), RED, "s_left"), (2, 1, RED, "s_right"), (F(4, 3), 0, BLUE, "s_bottom"),
            (F(13, 10), F(11, 10), GREEN, "p")],
        3: [(F(3, 5), F(6, 5), RED, "s_left"), (2, 1, RED, "s_right"), (F(4, 3), 0, BLUE, "s_bottom"),
            (F(13, 10), F(11, 10), BLUE, "i"), (F(79, 60), F(11, 20), GREEN, "i'")],
        4: [(F(1, 4), F(1, 2), RED, "s_left"), (F(5, 2), F(1, 2), RED, "s_right"),
            (F(4, 3), 0, BLUE, "s_bottom"), (F(3, 2), F(1, 2), GREEN, "i'"), (F(5, 3), 1, BLUE, "i")],
        5: [(*_A1, RED, "a'"), (*_B, BLUE, "b"), (*_B1, BLUE, "b'"),
            (*_C, GREEN, "c"), (*_C1, GREEN, "c'"), (*_A, RED, "a")],
    }[i]
    return _cps(T + rows)


SQUARE = ((0, 0), (4, 0), (4, 4), (0, 4))


def nine_point() -> ColoredPointSet:
    """Square Q (black) with its unique 3-color blocking set: four side blockers and the center."""
    return _cps([
        (0, 0, BLACK, "q1"), (4, 0, BLACK, "q2"), (4, 4, BLACK, "q3"), (0, 4, BLACK, "q4"),
        (2, 0, BLUE, "y12"), (4, 2, RED, "y23"), (2, 4, BLUE, "y34"), (0, 2, RED, "y41"),
        (2, 2, GREEN, "z"),
    ])


CONCAVE = ((2, -1), (0, 2), (-2, -1), (0, 0))


def ten_point() -> ColoredPointSet:
    """Red concave quadruple x1..x4 (x4 inside) with its 3-color blocking set."""
    return _cps([
        (2, -1, RED, "x1"), (0, 2, RED, "x2"), (-2, -1, RED, "x3"), (0, 0, RED, "x4"),
        (F(5, 3), F(-1, 2), GREEN, "s12"), (F(-1, 3), F(3, 2), BLACK, "s23"),
        (F(-4, 3), -1, BLUE, "s13"), (1, F(-1, 2), BLACK, "s14"),
        (0, 1, BLUE, "s24"), (-1, F(-1, 2), GREEN, "s34"),
    ])


def ten_point_case1_printed() -> ColoredPointSet:
    """Concave quadruple with a blocker at the midpoint of every segment (schematic)."""
    h = F(1, 2)
    return _cps([
        (2, -1, RED, "x1"), (0, 2, RED, "x2"), (-2, -1, RED, "x3"), (0, 0, RED, "x4"),
        (0, 1, BLUE, "s24"), (1, -h, BLACK, "s14"), (1, h, GREEN, "s12"),
        (0, -1, BLUE, "s13"), (-1, -h, GREEN, "s34"), (-1, h, BLACK, "s23"),
    ])


HEXAGON = ((2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2))
# Moving (1, 2) up breaks the concurrency of the three long diagonals.
HEXAGON_PERTURBED = ((2, 0), (1, 3), (-1, 2), (-2, 0), (-1, -2), (1, -2))
