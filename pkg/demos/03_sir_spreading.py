"""
SIR spreading from top-ranked seeds
===================================

Seed sets of 2-10 % of a weighted Barabási–Albert graph, chosen by each
method, are spread with the SIR model. Final infected scale is averaged over
Monte Carlo runs.
"""

from hookerank import SirParams, generate_ba_weighted, influence_curve, sir_simulate
from hookerank.pipeline import METHODS, seed_count, seeds_by

g = generate_ba_weighted(2000, 4, seed=1)
params = SirParams(beta=0.05, gamma=1.0, runs=100)
fractions = [0.02, 0.04, 0.06, 0.08, 0.10]

curves = {}
for method in METHODS:
    outs = [(p, sir_simulate(g, seeds_by(g, method, seed_count(g.n, p)), params, seed=7)) for p in fractions]
    curves[method] = influence_curve(outs)

print("fraction " + " ".join(f"{m:>8}" for m in METHODS))
for i, p in enumerate(fractions):
    print(f"{p:>8.2f} " + " ".join(f"{curves[m].final_scale[i]:>8.4f}" for m in METHODS))

###############################################################################
# Infected scale against time for the 6 % seed sets.

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    for m, c in curves.items():
        ax1.plot(c.fractions, c.final_scale, marker="o", label=m)
        ax2.plot(c.per_step[2], label=m)
    ax1.set_xlabel("seed fraction")
    ax1.set_ylabel("final infected scale")
    ax2.set_xlabel("step")
    ax2.legend()
    fig.savefig("sir_spreading.png", dpi=100)
    print("wrote sir_spreading.png")
