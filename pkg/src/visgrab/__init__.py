"""Exact computations on colored planar point sets: visibility graphs, proper
colorings, blocking sets, combinatorial equivalence and empty convex polygons."""

from .blocking import (BlockTarget, BlockingReport, Reason, classify_triangle_blocking,
                       hexagon_blocker_lower_bound, is_color_empty, is_k_color_blocked,
                       min_diagonal_blockers)
from .coloring import chromatic_number, is_properly_colored, k_colorable
from .empty_polygon import (EmptyKgonWitness, find_empty_convex_kgon, horton_set,
                            mc35_upper_bound, mono_empty_hexagon)
from .equivalence import are_equivalent, signature
from .errors import InvalidInput, ParseError, VerificationFailed
from .geometry import Orientation, Point, convex_hull, orient, point_in_convex_hull, strictly_between
from .search import Mode, SearchConfig, SearchReport, replay, search_blocking, search_extremal
from .visibility import ColoredPointSet, VisibilityGraph, blockers, max_collinear, visibility_graph

__version__ = "0.1.0"
