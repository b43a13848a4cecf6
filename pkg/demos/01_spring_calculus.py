"""
Springs in series and in parallel
=================================

Edge weights are read as spring constants. Two springs in series are softer
than either one; two in parallel are stiffer than both. From a source node,
every node within three hops gets one equivalent constant.
"""

from hookerank import WeightedGraph, combine_parallel, combine_series, spring_reduce

print("series(2, 2)   =", combine_series(2, 2))
print("parallel(1, 2) =", combine_parallel(1, 2))

# S1 and S2 in series, the result in parallel with S3
print("parallel(series(2, 2), 3) =", combine_parallel(combine_series(2, 2), 3))

###############################################################################
# The same picture on a graph: B is the source, B-E-F is a two-spring path
# and B-F a direct spring. F collects both.

B, E, F = 0, 1, 2
g = WeightedGraph.from_edges(3, [(B, E, 2.0), (E, F, 2.0), (B, F, 3.0)], labels=["B", "E", "F"])
for node, k_eq in spring_reduce(g, B).items():
    print(f"k_eq(B -> {g.label(node)}) = {k_eq:.4f}")

###############################################################################
# Nodes further than three hops are not reached.

chain = WeightedGraph.from_edges(6, [(i, i + 1, 1.0) for i in range(5)])
print("path from node 0:", spring_reduce(chain, 0))
