"""
Extremal sets and empty polygons
================================

How large can a point set with at most three points on a line be when its
visibility graph is k-colorable? The search answers small cases exactly, and
empty convex polygons explain why the answer is finite for five colors.
"""
from visgrab import SearchConfig, are_equivalent, search_extremal
from visgrab.empty_polygon import (find_empty_convex_kgon, forces_large_class, horton_set,
                                   largest_class_lower_bound, mc35_upper_bound)
from visgrab.figures import six_point, twelve_integer
from visgrab.geometry import convex_hull

# %%
# Two and three colors on the 5 x 5 grid, searched to exhaustion.
for k in (2, 3):
    r = search_extremal(SearchConfig(k=k, grid=(1, 2), budget=10**6))
    print(f"k={k}: best {r.best_size} after {r.nodes_expanded} nodes ({r.stop_reason})")
    print("   ", [(str(p.x), str(p.y)) for p in r.best.points])

# %%
# Different seeds visit candidates in different orders, yet the 6-point
# answer is always the same configuration.
same = sum(are_equivalent(search_extremal(SearchConfig(k=3, grid=(1, 2), seed=s, target=6)).best,
                          six_point()) is not None for s in range(200))
print(f"{same}/200 seeds give the canonical 6-point set")

# %%
# Four colors: seeded with the inner eight points of the 12-point set, the
# search completes the hull.
X = twelve_integer()
hull = set(convex_hull(X.points))
r = search_extremal(SearchConfig(k=4, grid=(1, 3), initial=[p for i, p in enumerate(X.points) if i not in hull],
                                 target=12))
print("k=4 from 8 seed points:", r.best_size)

# %%
# Horton sets have no empty convex 7-gon; random sets are full of empty pentagons.
H = horton_set(16)
print("Horton 16:", " ".join(f"({p.x},{p.y})" for p in H))
print("empty 6-gon:", find_empty_convex_kgon(H, 6) is not None,
      " empty 7-gon:", find_empty_convex_kgon(H, 7) is not None)

# %%
# Five colors: if every 463 points in general position span an empty
# hexagon, a color class that large finds one, and that hexagon would need a
# 4-color blocking. Pigeonhole on the class sizes gives the bound.
n = mc35_upper_bound(463) + 1
print(f"{n} points, 5 colors: some class has {largest_class_lower_bound(n, 5)} points;",
      "forced:", forces_large_class(n, 463))
