"""Small built-in graphs."""
from __future__ import annotations

from .graph import WeightedGraph

# 11-node toy network: core A-D (3-shell), E F I J (2-shell), leaves G H K.
# B is adjacent to A, C, D, E and F; B-E-F closes a triangle.
TOY_EDGES = [
    ("A", "B", 5), ("A", "C", 2), ("A", "D", 10), ("B", "C", 10), ("B", "D", 2),
    ("C", "D", 9), ("B", "E", 4), ("B", "F", 2), ("E", "F", 8), ("D", "I", 6),
    ("I", "J", 9), ("J", "C", 5), ("E", "G", 4), ("E", "H", 3), ("I", "K", 5),
]  # fmt: skip

TOY_KSHELL = {"A": 3, "B": 3, "C": 3, "D": 3, "E": 2, "F": 2, "G": 1, "H": 1, "I": 2, "J": 2, "K": 1}


def toy_network() -> WeightedGraph:
    labels = sorted(TOY_KSHELL)
    ix = {lab: i for i, lab in enumerate(labels)}
    return WeightedGraph.from_edges(len(labels), ((ix[u], ix[v], w) for u, v, w in TOY_EDGES), labels)
