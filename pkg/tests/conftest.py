import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import strategies as st

from hookerank import WeightedGraph
from hookerank.datasets import toy_network


def from_nx(G: nx.Graph) -> WeightedGraph:
    G = nx.convert_node_labels_to_integers(G)
    return WeightedGraph.from_edges(
        max(G.number_of_nodes(), 1), [(u, v, d.get("weight", 1.0)) for u, v, d in G.edges(data=True)]
    )


def to_nx(g: WeightedGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_weighted_edges_from(g.edges())
    return G


def path(n, w=1.0):
    return WeightedGraph.from_edges(n, [(i, i + 1, w) for i in range(n - 1)])


def star(leaves, w=1.0):
    return WeightedGraph.from_edges(leaves + 1, [(0, i, w) for i in range(1, leaves + 1)])


def complete(n, w=1.0):
    return WeightedGraph.from_edges(n, [(u, v, w) for u, v in itertools.combinations(range(n), 2)])


@st.composite
def weighted_graphs(draw, min_nodes=1, max_nodes=12, min_w=0.5, max_w=5.0):
    n = draw(st.integers(min_nodes, max_nodes))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    ws = draw(st.lists(st.floats(min_w, max_w), min_size=len(chosen), max_size=len(chosen)))
    return WeightedGraph.from_edges(n, [(u, v, w) for (u, v), w in zip(chosen, ws)])


def random_graph(rng: np.random.Generator, n: int, p: float, low=0.5, high=5.0) -> WeightedGraph:
    edges = [(u, v, float(rng.uniform(low, high))) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    return WeightedGraph.from_edges(n, edges)


def random_tree(rng: np.random.Generator, n: int, low=0.5, high=5.0) -> WeightedGraph:
    edges = [(int(rng.integers(v)), v, float(rng.uniform(low, high))) for v in range(1, n)]
    perm = rng.permutation(n)
    return WeightedGraph.from_edges(n, [(int(perm[u]), int(perm[v]), w) for u, v, w in edges])


@pytest.fixture
def toy():
    return toy_network()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
