"""
Ranking the 11-node toy network
===============================

Core numbers, weighted k-shell values and KSHR scores side by side, plus the
weighted baselines for comparison.
"""

from hookerank import kshell_decompose, kshr_scores, weighted_kshell
from hookerank.datasets import toy_network
from hookerank.pipeline import METHODS, rank_by

g = toy_network()
ks = kshell_decompose(g)
wk = weighted_kshell(g)
kshr = kshr_scores(g).score_of()

print(f"{'node':>4} {'k-shell':>8} {'wk-shell':>10} {'KSHR':>8}")
for u in range(g.n):
    print(f"{g.label(u):>4} {ks[u]:>8} {wk[u]:>10.4f} {kshr[u]:>8.4f}")

###############################################################################
# Dividing by the weighted k-shell value rewards nodes with many stiff paths
# out to three hops but a small weighted core, so F comes first while the
# densely tied core nodes A-D rank low.

for method in METHODS:
    top = [g.label(u) for u in rank_by(g, method).top(3)]
    print(f"{method:>8}: {' '.join(top)}")
