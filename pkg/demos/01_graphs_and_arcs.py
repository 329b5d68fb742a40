"""
Graph catalog and the arc basis
===============================

Every walk in this package lives on the arcs (directed edges) of a small
graph.  This script builds the six catalog graphs, prints their degree
sequences and shows how arcs double as coin states.
"""

# %%
from twowalk import build_arc_table, catalog
from twowalk.graph import CATALOG_NAMES, format_graph

for name in CATALOG_NAMES:
    g = catalog(name)
    arcs = build_arc_table(g)
    print(f"{name:14s} n={g.n:2d} edges={g.num_edges:2d} arcs={len(arcs):2d} degrees={g.degrees}")

# %%
# The arcs leaving vertex 0 of the joined Cayley tree are its coin states;
# port p points at the p-th smallest neighbour.  The shift sends each arc to
# its reverse.
g = catalog("3ct2-joined")
arcs = build_arc_table(g)
for a in range(arcs.offsets[0], arcs.offsets[1]):
    print(f"port {a - arcs.offsets[0]}: arc {arcs.arcs[a]} -> shifted to {arcs.arcs[arcs.reverse[a]]}")

# %%
# The plain-text exchange format (also what `twowalk graph` writes).
print(format_graph(catalog("q3-modified")))
