"""
Kendall tau and spreader dispersion
===================================

Each method's full ranking is compared against the ranking produced by
single-node SIR cascades; the average hop distance between the chosen
spreaders measures how spread out they are.
"""

from hookerank import RankList, SirParams, avg_spreader_distance, generate_ba_weighted, kendall_tau, sir_node_strength
from hookerank.pipeline import METHODS, rank_by, seeds_by

g = generate_ba_weighted(500, 3, seed=4)
rankings = {m: rank_by(g, m) for m in METHODS}

for beta in (0.05, 0.1, 0.2):
    truth = RankList.from_scores(sir_node_strength(g, SirParams(beta=beta, runs=50), seed=1))
    row = {m: kendall_tau(r, truth) for m, r in rankings.items()}
    print(f"beta={beta:<5}" + " ".join(f"{m}={t.tau_b:+.3f}" for m, t in row.items()))

###############################################################################
# Spreader distance for the top 5 %.

k = 25
for m in METHODS:
    print(f"L_s({m}) = {avg_spreader_distance(g, seeds_by(g, m, k)).mean:.3f}")
