"""
Twelve points, four colors
==========================

A walk through the integer 12-point set, from its visibility graph to the
reason three colors are not enough.
"""
from pathlib import Path

import numpy as np

from visgrab import chromatic_number, is_properly_colored, max_collinear, visibility_graph
from visgrab.coloring import k_colorable
from visgrab.figures import PALETTE, twelve_integer
from visgrab.render import Style, render

X = twelve_integer()
for name, p, c in zip(X.names, X.points, X.colors):
    print(f"{name:>4}  ({p.x}, {p.y})  {PALETTE[c]}")

# %%
# The visibility graph is stored densely; its degree sequence already shows
# how crowded the set is.
G = visibility_graph(X)
degrees = G.adjacency.sum(axis=1)
print("edges:", len(G.edges()), " degrees:", np.sort(degrees)[::-1])

# %%
# Every same-colored pair has a blocker, and no line carries four points.
print("proper:", is_properly_colored(X).proper, " max collinear:", max_collinear(X))

# %%
# Exact coloring: a 4-clique is a lower bound, and the 3-coloring search
# fails outright.
res = chromatic_number(G)
print("chi =", res.chi, " clique:", [X.names[i] for i in res.lower_bound_certificate])
print("3-colorable:", k_colorable(G, 3) is not None)

# %%
# Same-colored pairs drawn as dashed segments; each one passes through a
# point of another color.
out = Path("demo_output")
out.mkdir(exist_ok=True)
(out / "twelve.svg").write_text(render(X, Style(blocked_pairs=True, show_names=True)))
print("wrote", out / "twelve.svg")
