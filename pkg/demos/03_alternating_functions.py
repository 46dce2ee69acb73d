"""
Pruned sums for other alternating functions
===========================================

Any function f(G, A) that changes sign when an edge is added without
merging components can be summed over broken-cycle-free subsets only. Here
f(G, A) = (-1)^|A| g(k(V, A)) for an arbitrary table g, with integer and
polynomial values, and any selection of broken cycles.

The cancellation behind this pairs each subset A with A + e, where e is the
largest maximal closing edge among the selected broken cycles. A variant
partition based on minimal closing edges does not always pair up; the last
cell shows a four-edge multigraph where it fails.
"""

import random

from hyperchrome import (
    INTEGERS,
    POLYNOMIALS,
    EdgeOrder,
    Hypergraph,
    Polynomial,
    block_pairing_failures,
    broken_cycles,
    cancelling_family,
    check_alternating_condition,
    mask_edges,
    signed_table_function,
    verify_generalized_theorem,
)
from hyperchrome.generators import random_hypergraph, random_order

rng = random.Random(7)

#%%
G = random_hypergraph(6, 7, rng, min_arity=2)
order = random_order(G.edge_count, rng)
broken = broken_cycles(G, order)
print(G)
print("broken cycles:", [mask_edges(B) for B in broken])

#%%
g = [rng.randint(-9, 9) for _ in range(G.vertex_count + 1)]
f = signed_table_function(g)
for r in range(len(broken) + 1):
    rep = verify_generalized_theorem(G, order, INTEGERS, f, broken[:r])
    print(f"{r} broken cycles selected: {rep.summary()}")

#%%
gp = [Polynomial(rng.randint(-3, 3) for _ in range(3)) for _ in range(G.vertex_count + 1)]
rep = verify_generalized_theorem(G, order, POLYNOMIALS, signed_table_function(gp, POLYNOMIALS), broken)
print(rep.summary())

#%%
# |A| alone is not alternating.
print("violation:", check_alternating_condition(G, INTEGERS, lambda G, A: bin(A).count("1")))

#%%
if broken:
    fam = cancelling_family(G, order, broken)
    print(f"cancelling family of {len(fam.family)} subsets paired by edge {fam.closer}: "
          f"involution={fam.is_involution()}")

#%%
# Triangle a-b-c with the edge ac doubled, order ab < ac1 < bc < ac2.
H = Hypergraph.from_edges([["a", "b"], ["b", "c"], ["a", "c"], ["a", "c"]])
order = EdgeOrder.from_sequence([0, 2, 1, 3])
print("min-closer partition failures:", block_pairing_failures(H, order))
print("upper-closer partition failures:", block_pairing_failures(H, order, upper_closers=True))
