"""Weighted undirected graphs, edge-list ingestion and a weighted
Barabási–Albert generator.

Graphs are stored in compressed sparse row form: ``indptr``, ``indices`` and
``weights`` arrays, with each row's neighbours sorted by id. Instances are
treated as immutable once built.
"""
from __future__ import annotations

import logging
import math
import os
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

__all__ = [
    "EdgeListError",
    "IngestOptions",
    "WeightedGraph",
    "load_edge_list",
    "write_edge_list",
    "generate_ba_weighted",
    "neighbors_within_hops",
]

_LOG = logging.getLogger(__name__)

_SPLIT = re.compile(r"[,\s]+")
MERGE_RULES = ("max", "min", "sum", "first", "last")


class EdgeListError(ValueError):
    """Malformed edge-list input. ``lineno`` is 1-based when known."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected simple graph with strictly positive edge weights.

    Build instances with :meth:`from_edges` rather than the raw constructor;
    it merges duplicates, drops self-loops and validates weights.
    """

    indptr: np.ndarray
    indices: np.ndarray
    weights: np.ndarray
    labels: tuple[str, ...] | None = None
    info: Mapping[str, object] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        for arr in (self.indptr, self.indices, self.weights):
            arr.flags.writeable = False

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int, float]],
        labels: Sequence[str] | None = None,
        merge_rule: str = "max",
    ) -> "WeightedGraph":
        if n < 1:
            raise ValueError("graph needs at least one node")
        if merge_rule not in MERGE_RULES:
            raise ValueError(f"unknown merge rule {merge_rule!r}")
        if labels is not None and len(labels) != n:
            raise ValueError("labels must have one entry per node")
        merged: dict[tuple[int, int], float] = {}
        self_loops = 0
        for u, v, w in edges:
            u, v, w = int(u), int(v), float(w)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                self_loops += 1
                continue
            if not w > 0 or not math.isfinite(w):
                raise ValueError(f"edge ({u}, {v}) has non-positive weight {w}")
            key = (u, v) if u < v else (v, u)
            old = merged.get(key)
            if old is None or merge_rule == "last":
                merged[key] = w
            elif merge_rule == "max":
                merged[key] = max(old, w)
            elif merge_rule == "min":
                merged[key] = min(old, w)
            elif merge_rule == "sum":
                merged[key] = old + w
        m = len(merged)
        if m:
            pairs = np.array(list(merged.keys()), dtype=np.int64)
            w_arr = np.fromiter(merged.values(), dtype=np.float64, count=m)
        else:
            pairs = np.empty((0, 2), dtype=np.int64)
            w_arr = np.empty(0, dtype=np.float64)
        src = np.concatenate([pairs[:, 0], pairs[:, 1]])
        dst = np.concatenate([pairs[:, 1], pairs[:, 0]])
        ww = np.concatenate([w_arr, w_arr])
        order = np.lexsort((dst, src))
        src, dst, ww = src[order], dst[order], ww[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        info = {"self_loops_skipped": self_loops}
        return cls(indptr, dst, ww, tuple(labels) if labels is not None else None, info)

    @property
    def n(self) -> int:
        return len(self.indptr) - 1

    @property
    def n_edges(self) -> int:
        return len(self.indices) // 2

    def degree(self) -> np.ndarray:
        return np.diff(self.indptr)

    def strength(self) -> np.ndarray:
        """Weighted degree (sum of incident edge weights) per node."""
        rows = np.repeat(np.arange(self.n), self.degree())
        return np.bincount(rows, weights=self.weights, minlength=self.n)

    def neighbors(self, u: int) -> tuple[np.ndarray, np.ndarray]:
        """Neighbour ids (ascending) and the matching edge weights of ``u``."""
        lo, hi = self.indptr[u], self.indptr[u + 1]
        return self.indices[lo:hi], self.weights[lo:hi]

    def weight(self, u: int, v: int) -> float | None:
        nbrs, ws = self.neighbors(u)
        i = np.searchsorted(nbrs, v)
        if i < len(nbrs) and nbrs[i] == v:
            return float(ws[i])
        return None

    def edges(self) -> list[tuple[int, int, float]]:
        """Each undirected edge once, as ``(u, v, w)`` with ``u < v``."""
        out = []
        for u in range(self.n):
            nbrs, ws = self.neighbors(u)
            for v, w in zip(nbrs.tolist(), ws.tolist()):
                if u < v:
                    out.append((u, v, w))
        return out

    def label(self, u: int) -> str:
        return self.labels[u] if self.labels is not None else str(u)

    def adjacency(self):
        """Weighted adjacency as a ``scipy.sparse.csr_array``."""
        from scipy import sparse

        return sparse.csr_array((self.weights, self.indices, self.indptr), shape=(self.n, self.n))

    def scaled(self, alpha: float) -> "WeightedGraph":
        if not alpha > 0:
            raise ValueError("scale factor must be positive")
        return WeightedGraph(self.indptr.copy(), self.indices.copy(), self.weights * alpha, self.labels)


@dataclass(frozen=True)
class IngestOptions:
    merge_rule: str = "max"
    weight_shift: bool = False
    default_weight: float = 1.0


def _densify(tokens: list[str]) -> dict[str, int]:
    uniq = list(dict.fromkeys(tokens))
    try:
        uniq.sort(key=int)
    except ValueError:
        pass  # non-integer labels keep first-appearance order
    return {tok: i for i, tok in enumerate(uniq)}


def load_edge_list(path: str | os.PathLike, options: IngestOptions | None = None) -> WeightedGraph:
    """Read a ``u v [w]`` edge list (space or comma separated, ``#`` comments).

    Directed inputs are symmetrised and duplicate pairs merged with
    ``options.merge_rule``. Non-positive weights raise :class:`EdgeListError`
    unless ``options.weight_shift`` is set, in which case every weight becomes
    ``w - min_w + 1``. Integer labels are densified in numeric order, anything
    else in order of first appearance.
    """
    options = options or IngestOptions()
    raw: list[tuple[str, str, float, int]] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = [p for p in _SPLIT.split(line) if p]
            if len(parts) not in (2, 3):
                raise EdgeListError(f"expected 'u v [w]', got {line!r}", lineno)
            if len(parts) == 3:
                try:
                    w = float(parts[2])
                except ValueError:
                    raise EdgeListError(f"bad weight {parts[2]!r}", lineno) from None
                if not math.isfinite(w):
                    raise EdgeListError(f"non-finite weight {parts[2]!r}", lineno)
            else:
                w = options.default_weight
            raw.append((parts[0], parts[1], w, lineno))
    if not raw:
        raise EdgeListError(f"no edges found in {os.fspath(path)!r}")

    min_w = min(r[2] for r in raw)
    if min_w <= 0:
        if not options.weight_shift:
            bad = next(r for r in raw if r[2] <= 0)
            raise EdgeListError(f"non-positive weight {bad[2]} (enable weight_shift)", bad[3])
        shift = 1.0 - min_w
        raw = [(u, v, w + shift, ln) for u, v, w, ln in raw]

    ids = _densify([tok for r in raw for tok in r[:2]])
    labels = [""] * len(ids)
    for tok, i in ids.items():
        labels[i] = tok
    g = WeightedGraph.from_edges(
        len(ids), ((ids[u], ids[v], w) for u, v, w, _ in raw), labels, options.merge_rule
    )
    skipped = g.info["self_loops_skipped"]
    if skipped:
        _LOG.warning("skipped %d self-loop line(s) in %s", skipped, os.fspath(path))
    return g


def _fmt(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else repr(float(x))


def write_edge_list(g: WeightedGraph, path: str | os.PathLike, header: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for line in header:
            fh.write(f"# {line}\n")
        for u, v, w in g.edges():
            fh.write(f"{g.label(u)} {g.label(v)} {_fmt(w)}\n")


def generate_ba_weighted(n: int, m: int, seed: int) -> WeightedGraph:
    """Barabási–Albert graph with integer weights drawn uniformly from 1..10.

    Growth starts from a complete graph on ``m`` nodes; every later node
    attaches to ``m`` distinct existing nodes chosen with probability
    proportional to degree.
    """
    if m < 1 or n <= m:
        raise ValueError(f"need n > m >= 1, got n={n}, m={m}")
    rng = np.random.default_rng(seed)
    edges: list[tuple[int, int]] = [(u, v) for u in range(m) for v in range(u + 1, m)]
    # every node appears once per unit of degree
    pool: list[int] = [u for u in range(m) for _ in range(m - 1)]
    for new in range(m, n):
        if not pool:  # m == 1, first step
            targets = list(range(new))
        else:
            targets = []
            chosen = set()
            while len(targets) < m:
                t = pool[int(rng.integers(len(pool)))]
                if t not in chosen:
                    chosen.add(t)
                    targets.append(t)
        for t in targets:
            edges.append((t, new))
            pool.append(t)
            pool.append(new)
    weights = rng.integers(1, 11, size=len(edges))
    return WeightedGraph.from_edges(n, ((u, v, float(w)) for (u, v), w in zip(edges, weights)))


def neighbors_within_hops(g: WeightedGraph, source: int, h: int) -> list[tuple[int, int]]:
    """Nodes within ``h`` hops of ``source`` as ``(node, hops)`` in BFS order.

    Levels are emitted in increasing distance and ascending id within a level;
    the source itself is excluded.
    """
    if not 0 <= source < g.n:
        raise IndexError(f"source {source} out of range for n={g.n}")
    if h < 0:
        raise ValueError("h must be non-negative")
    dist = {source: 0}
    frontier = [source]
    out: list[tuple[int, int]] = []
    for level in range(1, h + 1):
        nxt = set()
        for u in frontier:
            for v in g.neighbors(u)[0].tolist():
                if v not in dist:
                    nxt.add(v)
        if not nxt:
            break
        frontier = sorted(nxt)
        for v in frontier:
            dist[v] = level
            out.append((v, level))
    return out


def hop_distances(g: WeightedGraph, source: int) -> np.ndarray:
    """Unweighted BFS distances from ``source``; -1 marks unreachable nodes."""
    dist = np.full(g.n, -1, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    indptr, indices = g.indptr, g.indices
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in indices[indptr[u] : indptr[u + 1]]:
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist
