import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given

from hookerank import WeightedGraph, kshell_decompose, shell_index, weighted_kshell
from hookerank.datasets import TOY_KSHELL

from .conftest import complete, path, random_graph, star, to_nx, weighted_graphs
from .oracles import core_numbers_bruteforce


def test_path_and_clique():
    assert kshell_decompose(path(5)).tolist() == [1] * 5
    assert kshell_decompose(complete(4)).tolist() == [3] * 4


def test_toy_kshell_column(toy):
    ks = kshell_decompose(toy)
    assert {toy.label(u): int(k) for u, k in enumerate(ks)} == TOY_KSHELL


def test_isolated_nodes_zero():
    g = WeightedGraph.from_edges(4, [(0, 1, 2.0)])
    idx = shell_index(g)
    assert idx.kshell.tolist() == [1, 1, 0, 0]
    assert idx.wkshell[2:].tolist() == [0.0, 0.0]


def test_triangle_wkshell():
    wk = weighted_kshell(complete(3))
    assert wk == pytest.approx([2 + 2 * math.sqrt(2)] * 3, rel=1e-15)
    assert wk[0] == pytest.approx(4.8284, abs=1e-4)


def test_single_edge_wkshell():
    g = WeightedGraph.from_edges(2, [(0, 1, 4.0)])
    assert weighted_kshell(g).tolist() == [3.0, 3.0]


def test_star_leaf_wkshell():
    w = 2.5
    wk = weighted_kshell(star(4, w))
    assert wk[1:] == pytest.approx([1 + math.sqrt(w)] * 4)
    assert wk[0] == pytest.approx(1 + 4 * math.sqrt(w))


@pytest.mark.parametrize("seed", range(20))
def test_kshell_matches_bruteforce_and_networkx(seed):
    rng = np.random.default_rng(seed)
    g = random_graph(rng, int(rng.integers(1, 30)), float(rng.uniform(0.05, 0.6)))
    ks = kshell_decompose(g).tolist()
    assert ks == core_numbers_bruteforce(g.n, g.edges())
    assert ks == [nx.core_number(to_nx(g))[u] for u in range(g.n)]


@given(weighted_graphs())
def test_shell_invariants(g):
    idx = shell_index(g)
    assert np.all(idx.kshell <= g.degree())
    assert np.all(idx.wkshell >= idx.kshell)


@given(weighted_graphs(min_nodes=2))
def test_node_removal_never_raises_core(g):
    ks = kshell_decompose(g)
    keep = list(range(1, g.n))
    sub = WeightedGraph.from_edges(g.n - 1, [(u - 1, v - 1, w) for u, v, w in g.edges() if u and v])
    assert np.all(kshell_decompose(sub) <= ks[keep])


def test_uniform_core_formula():
    # unit weights, every core number c: wk = c + degree * sqrt(c)
    for g, c in ((complete(5), 4), (path(2), 1), (WeightedGraph.from_edges(6, [(i, (i + 1) % 6, 1.0) for i in range(6)]), 2)):
        idx = shell_index(g)
        assert set(idx.kshell.tolist()) == {c}
        assert idx.wkshell == pytest.approx(c + g.degree() * math.sqrt(c), rel=1e-15)


def test_weight_monotonicity():
    rng = np.random.default_rng(3)
    g = random_graph(rng, 12, 0.4)
    base = weighted_kshell(g)
    edges = g.edges()
    u, v, w = edges[len(edges) // 2]
    bumped = WeightedGraph.from_edges(g.n, [(a, b, x + 1.0 if (a, b) == (u, v) else x) for a, b, x in edges])
    new = weighted_kshell(bumped)
    ks = kshell_decompose(g)
    changed = np.flatnonzero(new != base).tolist()
    if ks[u] and ks[v]:
        assert changed == sorted([u, v])
        assert new[u] > base[u] and new[v] > base[v]
