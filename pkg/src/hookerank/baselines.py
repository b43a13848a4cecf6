"""Weighted comparison centralities: degree, eigenvector, VoteRank, k-shell."""
from __future__ import annotations

import warnings

import numpy as np
from scipy.sparse import csgraph

from .graph import WeightedGraph
from .shell import weighted_kshell
from .spring import RankList

__all__ = [
    "weighted_degree_rank",
    "weighted_eigenvector_rank",
    "weighted_voterank",
    "weighted_kshell_rank",
]


def weighted_degree_rank(g: WeightedGraph) -> RankList:
    return RankList.from_scores(g.strength())


def weighted_eigenvector_rank(
    g: WeightedGraph, tol: float = 1e-10, max_iter: int = 10_000
) -> RankList:
    """Dominant eigenvector of the weighted adjacency, per connected component.

    Power iteration on ``A + I`` (the shift keeps bipartite components from
    oscillating), each component scaled to unit maximum. Stops once successive
    iterates differ by less than ``tol`` in max-norm. Non-convergence emits a
    ``RuntimeWarning`` and is recorded as ``meta["converged"] = False``.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    A = g.adjacency()
    n_comp, comp = csgraph.connected_components(A, directed=False)
    x = np.ones(g.n)
    converged = np.zeros(n_comp, dtype=bool)
    it = 0
    for it in range(1, max_iter + 1):
        y = A @ x + x
        cmax = np.zeros(n_comp)
        np.maximum.at(cmax, comp, y)
        y = y / cmax[comp]
        diff = np.zeros(n_comp)
        np.maximum.at(diff, comp, np.abs(y - x))
        x = y
        converged = diff < tol
        if converged.all():
            break
    ok = bool(converged.all())
    if not ok:
        warnings.warn(f"eigenvector iteration did not converge in {max_iter} steps", RuntimeWarning)
    return RankList.from_scores(x, meta={"converged": ok, "iterations": it})


def weighted_voterank(g: WeightedGraph, k: int) -> list[int]:
    """Select ``k`` spreaders by weighted voting.

    Each round every unelected node collects ``sum(w_uv * ability[v])`` from its
    neighbours; the top scorer (lowest id on ties) is elected, its ability set to
    0 and each neighbour's ability reduced by ``1 / mean strength``.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"k={k} outside [1, {g.n}]")
    A = g.adjacency()
    strength = g.strength()
    mean_strength = strength.mean()
    suppress = 1.0 / mean_strength if mean_strength > 0 else 0.0
    ability = np.ones(g.n)
    elected = np.zeros(g.n, dtype=bool)
    out: list[int] = []
    for _ in range(k):
        votes = A @ ability
        votes[elected] = -np.inf
        u = int(np.argmax(votes))  # argmax returns the first (lowest id) maximum
        out.append(u)
        elected[u] = True
        ability[u] = 0.0
        nbrs, _ = g.neighbors(u)
        ability[nbrs] = np.maximum(ability[nbrs] - suppress, 0.0)
    return out


def weighted_kshell_rank(g: WeightedGraph) -> RankList:
    return RankList.from_scores(weighted_kshell(g))
