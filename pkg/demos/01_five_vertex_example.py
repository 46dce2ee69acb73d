"""
δ-cycles on a small hypergraph
==============================

Five vertices, four hyperedges. The whole hypergraph is not a δ-cycle: the
edge {1,2,3} is the only edge touching vertex 2, so deleting it leaves 2
isolated and raises the component count. Dropping that edge leaves three
edges in which every edge is redundant for connectivity.
"""

from hyperchrome import (
    broken_cycles,
    chromatic_subset_expansion,
    count_proper_colorings,
    enumerate_delta_cycles,
    evaluate,
    is_removable,
    mask_edges,
)
from hyperchrome.generators import five_vertex_example

G = five_vertex_example()
print(G)

#%%
# Which edges can be deleted from the whole hypergraph without
# disconnecting anything?
for e in range(G.edge_count):
    print(f"edge {e} {G.edge_labels(e)} removable: {is_removable(G, G.all_edges, e)}")

#%%
# The minimal subgraphs in which every edge is removable.
for C in enumerate_delta_cycles(G):
    print("δ-cycle:", [G.edge_labels(e) for e in C.edge_ids])

#%%
# Under the listing order the largest edge of that cycle is {3,4,5};
# removing it gives the broken cycle.
for B in broken_cycles(G):
    print("broken cycle:", [G.edge_labels(e) for e in mask_edges(B)])

#%%
# The chromatic polynomial and a check against brute-force counts.
P = chromatic_subset_expansion(G)
print("chi(G, x) =", P)
for k in range(6):
    print(f"  k={k}: polynomial {evaluate(P, k):>5}   colorings {count_proper_colorings(G, k):>5}")
