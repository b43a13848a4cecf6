"""Method registry shared by the CLI and the demo scripts."""
from __future__ import annotations

import numpy as np

from .baselines import (
    weighted_degree_rank,
    weighted_eigenvector_rank,
    weighted_kshell_rank,
    weighted_voterank,
)
from .graph import WeightedGraph
from .spring import RankList, kshr_scores

METHODS = ("kshr", "wdeg", "weig", "wvote", "wkshell")


def rank_by(g: WeightedGraph, method: str, kshr_mean: bool = False) -> RankList:
    """Full ranking of ``g`` under ``method``.

    VoteRank yields an election order rather than scores; its RankList scores
    are ``(n - position) / n``.
    """
    if method == "kshr":
        return kshr_scores(g, mean=kshr_mean)
    if method == "wdeg":
        return weighted_degree_rank(g)
    if method == "weig":
        return weighted_eigenvector_rank(g)
    if method == "wkshell":
        return weighted_kshell_rank(g)
    if method == "wvote":
        order = weighted_voterank(g, g.n)
        scores = np.empty(g.n)
        scores[order] = (g.n - np.arange(g.n)) / g.n
        return RankList.from_scores(scores)
    raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")


def seeds_by(g: WeightedGraph, method: str, k: int, kshr_mean: bool = False) -> list[int]:
    if method == "wvote":
        return weighted_voterank(g, k)
    return rank_by(g, method, kshr_mean).top(k)


def seed_count(n: int, fraction: float) -> int:
    """Number of seeds for a fraction of ``n`` nodes (at least one)."""
    if not 0 < fraction <= 1:
        raise ValueError(f"seed fraction must lie in (0, 1], got {fraction}")
    return max(1, int(round(fraction * n)))
