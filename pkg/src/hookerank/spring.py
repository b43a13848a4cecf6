"""KSHR centrality: edges as springs, reduced over a 3-hop BFS.

Edge weights act as spring constants. From each source node a level-order
BFS assigns every node within ``hops`` an equivalent spring constant:

* level 1 nodes receive the raw weight of their edge to the source;
* a node at level ``L > 1`` receives ``series(c_p, w_pv)`` from every parent
  ``p`` at level ``L - 1``, the contributions adding in parallel;
* once a level is discovered, each edge joining two of its nodes adds
  ``series(c_u, w_uv)`` to ``v`` (and symmetrically to ``u``), using the values
  from the previous step. Edges inside the outermost level are ignored.

A node's score is the sum of its equivalent constants divided by its weighted
k-shell value.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

import numba
import numpy as np

from .graph import WeightedGraph
from .shell import weighted_kshell

__all__ = [
    "RankList",
    "combine_series",
    "combine_parallel",
    "spring_reduce",
    "spring_sums",
    "kshr_scores",
    "top_k",
]

HOPS = 3


def combine_series(k1: float, k2: float) -> float:
    """Equivalent constant of two springs in series, ``k1*k2/(k1+k2)``."""
    if not (k1 > 0 and k2 > 0):
        raise ValueError(f"spring constants must be positive, got {k1}, {k2}")
    return k1 * k2 / (k1 + k2)


def combine_parallel(k1: float, k2: float) -> float:
    """Equivalent constant of two springs in parallel, ``k1 + k2``."""
    if not (k1 > 0 and k2 > 0):
        raise ValueError(f"spring constants must be positive, got {k1}, {k2}")
    return k1 + k2


@dataclass(frozen=True)
class RankList:
    """Nodes in descending score order, ties broken by ascending id."""

    nodes: np.ndarray
    scores: np.ndarray
    meta: Mapping[str, object] = field(default_factory=dict, compare=False)

    @classmethod
    def from_scores(cls, scores, meta: Mapping[str, object] | None = None) -> "RankList":
        scores = np.asarray(scores, dtype=np.float64)
        order = np.lexsort((np.arange(len(scores)), -scores))
        return cls(order, scores[order], dict(meta or {}))

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self) -> Iterator[tuple[int, float]]:
        return zip(self.nodes.tolist(), self.scores.tolist())

    def score_of(self) -> np.ndarray:
        """Scores indexed by node id."""
        out = np.empty(len(self.nodes))
        out[self.nodes] = self.scores
        return out

    def top(self, k: int) -> list[int]:
        return top_k(self, k)


def top_k(r: RankList, k: int) -> list[int]:
    if not 0 <= k <= len(r):
        raise ValueError(f"k={k} outside [0, {len(r)}]")
    return r.nodes[:k].tolist()


def spring_reduce(g: WeightedGraph, source: int, hops: int = HOPS) -> dict[int, float]:
    """Equivalent spring constant from ``source`` to every node within ``hops``."""
    if not 0 <= source < g.n:
        raise IndexError(f"source {source} out of range for n={g.n}")
    level = {source: 0}
    const: dict[int, float] = {}
    frontier = [source]
    for lev in range(1, hops + 1):
        base: dict[int, float] = {}
        for p in frontier:
            nbrs, ws = g.neighbors(p)
            for v, w in zip(nbrs.tolist(), ws.tolist()):
                if level.get(v, lev) < lev:
                    continue
                c = w if p == source else combine_series(const[p], w)
                base[v] = combine_parallel(base[v], c) if v in base else c
        if not base:
            break
        frontier = sorted(base)
        for v in frontier:
            level[v] = lev
        final = {v: base[v] for v in frontier}
        if lev < hops:
            for u in frontier:
                nbrs, ws = g.neighbors(u)
                for v, w in zip(nbrs.tolist(), ws.tolist()):
                    if level.get(v) == lev:
                        final[v] = combine_parallel(final[v], combine_series(base[u], w))
        const.update(final)
    return const


@numba.njit(cache=True)
def _spring_sums(indptr, indices, weights, hops):
    n = len(indptr) - 1
    sums = np.zeros(n)
    counts = np.zeros(n, dtype=np.int64)
    level = np.full(n, -1, dtype=np.int64)
    const = np.zeros(n)
    base = np.zeros(n)
    touched = np.empty(n, dtype=np.int64)
    for s in range(n):
        level[s] = 0
        touched[0] = s
        ntouched = 1
        fstart, fend = 0, 1
        for lev in range(1, hops + 1):
            nstart = ntouched
            for idx in range(fstart, fend):
                p = touched[idx]
                cp = const[p]
                for e in range(indptr[p], indptr[p + 1]):
                    v = indices[e]
                    w = weights[e]
                    lv = level[v]
                    if lv != -1 and lv < lev:
                        continue
                    c = w if lev == 1 else cp * w / (cp + w)
                    if lv == -1:
                        level[v] = lev
                        base[v] = c
                        touched[ntouched] = v
                        ntouched += 1
                    else:
                        base[v] += c
            if ntouched == nstart:
                break
            touched[nstart:ntouched].sort()
            for idx in range(nstart, ntouched):
                v = touched[idx]
                const[v] = base[v]
            if lev < hops:
                for idx in range(nstart, ntouched):
                    u = touched[idx]
                    bu = base[u]
                    for e in range(indptr[u], indptr[u + 1]):
                        v = indices[e]
                        if level[v] == lev:
                            w = weights[e]
                            const[v] += bu * w / (bu + w)
            fstart, fend = nstart, ntouched
        total = 0.0
        for idx in range(1, ntouched):
            total += const[touched[idx]]
        sums[s] = total
        counts[s] = ntouched - 1
        for idx in range(ntouched):
            level[touched[idx]] = -1
    return sums, counts


def spring_sums(g: WeightedGraph, hops: int = HOPS) -> tuple[np.ndarray, np.ndarray]:
    """Per node: total equivalent constant over its ``hops`` neighbourhood, and
    the neighbourhood size."""
    return _spring_sums(g.indptr, g.indices, g.weights, hops)


def kshr_scores(g: WeightedGraph, mean: bool = False, hops: int = HOPS) -> RankList:
    """Rank nodes by KSHR score.

    With ``mean=True`` the summed constants are averaged over the
    neighbourhood size before dividing by the weighted k-shell value.
    Isolated nodes score 0.
    """
    sums, counts = spring_sums(g, hops)
    if mean:
        sums = np.divide(sums, counts, out=np.zeros_like(sums), where=counts > 0)
    wk = weighted_kshell(g)
    scores = np.divide(sums, wk, out=np.zeros_like(sums), where=wk > 0)
    return RankList.from_scores(scores)
