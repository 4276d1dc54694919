"""
Blocking sets
=============

A unicolored target is blocked when the points placed inside its hull hide
every pair of target points from each other, with the whole set still
properly colored. Triangles first, then a square, then hexagons.
"""
from visgrab.blocking import (BlockTarget, classify_triangle_blocking, hexagon_blocker_lower_bound,
                              is_k_color_blocked, min_diagonal_blockers, split_target)
from visgrab.equivalence import are_equivalent
from visgrab.figures import BLACK, HEXAGON, HEXAGON_PERTURBED, SQUARE, TRIANGLE, nine_point, triangle_instance
from visgrab.search import Mode, SearchConfig, random_blocking_trials, search_blocking
from visgrab.visibility import ColoredPointSet

# %%
# The five reference blockings of a triangle all verify, and the classifier
# recognizes each one.
for i in range(1, 6):
    target, B = split_target(triangle_instance(i), [0, 1, 2])
    report = is_k_color_blocked(target, B, 3)
    print(f"instance {i}: |B|={len(B)} valid={report.valid} class={classify_triangle_blocking(target, B)}")

# %%
# Two colors never suffice. Random repair attempts fail, and the exhaustive
# search over its candidate positions runs dry almost at once.
T = BlockTarget(TRIANGLE, BLACK)
print(random_blocking_trials(T, 2, 2000, seed=1))
r = search_blocking(T, 2, SearchConfig(k=2, mode=Mode.BLOCKING, budget=10**5))
print("exhaustive, 2 colors:", r.stop_reason, r.nodes_expanded, "nodes")

# %%
# With three colors the search finds a blocking of the square, and it is the
# 9-point configuration again (side blockers plus the center).
Q = BlockTarget(SQUARE, BLACK)
r = search_blocking(Q, 3, SearchConfig(k=3, mode=Mode.BLOCKING, budget=10**6))
X = Q.as_pointset(4).union(ColoredPointSet(r.best.points, r.best.colors, 4))
print("square:", len(r.best), "blockers, same structure as the 9-point set:",
      are_equivalent(X, nine_point()) is not None)

# %%
# Hexagons need 6 edge blockers plus a hitting set of the 9 diagonals, and
# that hitting set shrinks by one when the long diagonals are concurrent.
for name, H in (("concurrent", HEXAGON), ("perturbed", HEXAGON_PERTURBED)):
    m, pts = min_diagonal_blockers(H)
    print(f"{name}: {hexagon_blocker_lower_bound(H)} blockers at least; diagonals hit by {m}: {pts}")

# %%
# A short 4-color search on the concurrent hexagon (the acceptance suite
# runs ten million nodes).
r = search_blocking(BlockTarget(HEXAGON, 0), 4, SearchConfig(k=4, mode=Mode.BLOCKING, budget=20_000))
print("hexagon, 4 colors:", r.witnesses, "blockings in", r.nodes_expanded, "nodes", f"({r.stop_reason})")
