"""Classical k-shell decomposition and the weighted k-shell value.

The weighted value of node ``i`` is its core number plus
``sqrt(w_ij * kshell[j])`` summed over direct neighbours ``j``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import WeightedGraph

__all__ = ["ShellIndex", "kshell_decompose", "weighted_kshell", "shell_index"]


@dataclass(frozen=True)
class ShellIndex:
    kshell: np.ndarray
    wkshell: np.ndarray


def kshell_decompose(g: WeightedGraph) -> np.ndarray:
    """Core number of every node, ignoring weights.

    Bucket-queue peeling (Batagelj & Zaversnik); linear in the edge count.
    Isolated nodes get 0.
    """
    n = g.n
    deg = g.degree().astype(np.int64)
    indptr, indices = g.indptr, g.indices
    max_deg = int(deg.max()) if n else 0
    # nodes sorted by degree, ascending id within a bin
    bin_start = np.zeros(max_deg + 2, dtype=np.int64)
    np.cumsum(np.bincount(deg, minlength=max_deg + 1), out=bin_start[1:])
    order = np.argsort(deg, kind="stable")
    pos = np.empty(n, dtype=np.int64)
    pos[order] = np.arange(n)
    vert = order.copy()
    bins = bin_start[:-1].copy()
    deg = deg.tolist()
    vert = vert.tolist()
    pos = pos.tolist()
    bins = bins.tolist()
    for i in range(n):
        v = vert[i]
        dv = deg[v]
        for u in indices[indptr[v] : indptr[v + 1]].tolist():
            du = deg[u]
            if du > dv:
                # swap u to the front of its bin, then shrink the bin
                pu, pw = pos[u], bins[du]
                w = vert[pw]
                if u != w:
                    vert[pu], vert[pw] = w, u
                    pos[u], pos[w] = pw, pu
                bins[du] += 1
                deg[u] = du - 1
    return np.asarray(deg, dtype=np.int64)


def weighted_kshell(g: WeightedGraph, kshell: np.ndarray | None = None) -> np.ndarray:
    """Weighted k-shell value of every node.

    ``kshell`` may be passed in to reuse an existing decomposition.
    """
    if kshell is None:
        kshell = kshell_decompose(g)
    rows = np.repeat(np.arange(g.n), g.degree())
    terms = np.sqrt(g.weights * kshell[g.indices])
    return kshell + np.bincount(rows, weights=terms, minlength=g.n)


def shell_index(g: WeightedGraph) -> ShellIndex:
    ks = kshell_decompose(g)
    return ShellIndex(ks, weighted_kshell(g, ks))
