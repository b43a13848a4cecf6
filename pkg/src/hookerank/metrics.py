"""Ranking and spreading metrics: Kendall tau, spreader distance, influence curves."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .diffusion import SirOutcome
from .graph import WeightedGraph, hop_distances
from .spring import RankList

__all__ = [
    "TauResult",
    "kendall_tau",
    "pair_counts",
    "SpreaderDistance",
    "avg_spreader_distance",
    "InfluenceCurve",
    "influence_curve",
]


@dataclass(frozen=True)
class TauResult:
    """``tau`` is ``(concordant - discordant) / (n(n-1)/2)``; ``tau_b`` corrects
    the denominator for ties. Pairs tied in either ranking count as neither
    concordant nor discordant."""

    tau: float
    tau_b: float
    concordant: int
    discordant: int
    n: int
    ties_x: int = 0
    ties_y: int = 0
    ties_xy: int = 0


def _merge_count(y: np.ndarray) -> int:
    """Number of strictly inverted pairs ``i < j, y[i] > y[j]``; sorts ``y``."""
    n = len(y)
    swaps = 0
    buf = np.empty_like(y)
    width = 1
    src, dst = y, buf
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if src[j] < src[i]:
                    dst[k] = src[j]
                    swaps += mid - i
                    j += 1
                else:
                    dst[k] = src[i]
                    i += 1
                k += 1
            dst[k : k + mid - i] = src[i:mid]
            k += mid - i
            dst[k : k + hi - j] = src[j:hi]
        src, dst = dst, src
        width *= 2
    y[:] = src
    return swaps


def _tied_pairs(values: np.ndarray) -> int:
    _, counts = np.unique(values, return_counts=True)
    return int((counts * (counts - 1) // 2).sum())


def pair_counts(x: Sequence[float], y: Sequence[float]) -> tuple[int, int, int, int, int]:
    """Concordant, discordant, x-tied, y-tied and jointly tied pair counts.

    Knight's O(n log n) method: sort by ``(x, y)`` and count inversions of ``y``.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape:
        raise ValueError("x and y must have the same length")
    n = len(x)
    total = n * (n - 1) // 2
    order = np.lexsort((y, x))
    xs, ys = x[order], y[order]
    ties_x = _tied_pairs(xs)
    ties_xy = _tied_pairs(np.stack([xs, ys], axis=1).view(np.complex128).ravel()) if n else 0
    ys = ys.copy()
    discordant = _merge_count(ys)
    ties_y = _tied_pairs(ys)
    concordant = total - ties_x - ties_y + ties_xy - discordant
    return concordant, discordant, ties_x, ties_y, ties_xy


def kendall_tau(r1: RankList, r2: RankList) -> TauResult:
    """Rank correlation between two rankings of the same node set, by score."""
    if len(r1) != len(r2) or set(r1.nodes.tolist()) != set(r2.nodes.tolist()):
        raise ValueError("rank lists cover different node sets")
    ids = np.sort(r1.nodes)
    s1 = dict(zip(r1.nodes.tolist(), r1.scores.tolist()))
    s2 = dict(zip(r2.nodes.tolist(), r2.scores.tolist()))
    x = np.array([s1[i] for i in ids.tolist()])
    y = np.array([s2[i] for i in ids.tolist()])
    nc, nd, tx, ty, txy = pair_counts(x, y)
    n = len(ids)
    total = n * (n - 1) // 2
    tau = (nc - nd) / total if total else float("nan")
    denom = math.sqrt((total - tx) * (total - ty))
    tau_b = (nc - nd) / denom if denom else float("nan")
    return TauResult(tau, tau_b, nc, nd, n, tx, ty, txy)


@dataclass(frozen=True)
class SpreaderDistance:
    """Mean hop distance between seed pairs; unreachable pairs are left out
    and their share reported in ``excluded_fraction``."""

    mean: float
    pairs: int
    excluded_fraction: float

    def __float__(self) -> float:
        return self.mean


def avg_spreader_distance(g: WeightedGraph, seeds: Iterable[int]) -> SpreaderDistance:
    seeds = sorted(set(int(s) for s in seeds))
    if len(seeds) < 2:
        raise ValueError("need at least two seeds")
    total = 0
    reached = 0
    for i, u in enumerate(seeds[:-1]):
        d = hop_distances(g, u)[seeds[i + 1 :]]
        ok = d >= 0
        total += int(d[ok].sum())
        reached += int(ok.sum())
    pairs = len(seeds) * (len(seeds) - 1) // 2
    mean = total / reached if reached else float("nan")
    return SpreaderDistance(mean, reached, 1.0 - reached / pairs)


@dataclass(frozen=True)
class InfluenceCurve:
    fractions: np.ndarray
    final_scale: np.ndarray
    stderr: np.ndarray
    per_step: list[np.ndarray]

    def rows(self) -> list[tuple[float, float, float]]:
        return list(zip(self.fractions.tolist(), self.final_scale.tolist(), self.stderr.tolist()))


def influence_curve(outcomes: Sequence[tuple[float, SirOutcome]]) -> InfluenceCurve:
    """Tabulate final infected scale against seed fraction, in input order."""
    if not outcomes:
        raise ValueError("no outcomes to tabulate")
    return InfluenceCurve(
        fractions=np.array([p for p, _ in outcomes], dtype=np.float64),
        final_scale=np.array([o.final_scale for _, o in outcomes]),
        stderr=np.array([o.stderr for _, o in outcomes]),
        per_step=[o.scale_per_step for _, o in outcomes],
    )
