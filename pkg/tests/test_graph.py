import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hookerank import (
    EdgeListError,
    IngestOptions,
    WeightedGraph,
    generate_ba_weighted,
    load_edge_list,
    neighbors_within_hops,
    write_edge_list,
)

from .conftest import path, star, weighted_graphs


def _write(tmp_path, text, name="g.edges"):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return p


def test_load_basic(tmp_path):
    g = load_edge_list(_write(tmp_path, "0 1 2.0\n1 2 3.0\n"))
    assert g.n == 3
    assert g.edges() == [(0, 1, 2.0), (1, 2, 3.0)]


def test_load_default_weight(tmp_path):
    g = load_edge_list(_write(tmp_path, "0 1\n"))
    assert g.edges() == [(0, 1, 1.0)]


def test_load_comma_and_comments(tmp_path):
    g = load_edge_list(_write(tmp_path, "# header\n\na,b,2\nb , c , 0.5\n"))
    assert g.labels == ("a", "b", "c")
    assert g.edges() == [(0, 1, 2.0), (1, 2, 0.5)]


def test_integer_labels_sorted_numerically(tmp_path):
    g = load_edge_list(_write(tmp_path, "10 2\n2 1\n"))
    assert g.labels == ("1", "2", "10")


def test_weight_shift(tmp_path):
    p = _write(tmp_path, "0 1 -10\n1 2 5\n")
    with pytest.raises(EdgeListError, match="line 1"):
        load_edge_list(p)
    g = load_edge_list(p, IngestOptions(weight_shift=True))
    assert g.weight(0, 1) == 1.0
    assert g.weight(1, 2) == 16.0


def test_zero_weight_rejected(tmp_path):
    with pytest.raises(EdgeListError, match="line 2"):
        load_edge_list(_write(tmp_path, "0 1 1\n1 2 0\n"))


@pytest.mark.parametrize("text, lineno", [("0 1 2\n0\n", 2), ("0 1 x\n", 1), ("0 1 2 3\n", 1), ("0 1 nan\n", 1)])
def test_parse_errors_carry_line_number(tmp_path, text, lineno):
    with pytest.raises(EdgeListError) as exc:
        load_edge_list(_write(tmp_path, text))
    assert exc.value.lineno == lineno


def test_self_loops_skipped_and_counted(tmp_path, caplog):
    g = load_edge_list(_write(tmp_path, "0 0 1\n0 1 1\n1 1 4\n"))
    assert g.edges() == [(0, 1, 1.0)]
    assert g.info["self_loops_skipped"] == 2
    assert "2 self-loop" in caplog.text


def test_duplicates_keep_max_and_symmetrise(tmp_path):
    g = load_edge_list(_write(tmp_path, "0 1 2\n1 0 5\n0 1 3\n"))
    assert g.edges() == [(0, 1, 5.0)]
    assert g.weight(1, 0) == g.weight(0, 1) == 5.0
    g_sum = load_edge_list(tmp_path / "g.edges", IngestOptions(merge_rule="sum"))
    assert g_sum.weight(0, 1) == 10.0


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_edge_list(tmp_path / "nope.edges")


def test_write_roundtrip(tmp_path):
    g = generate_ba_weighted(50, 3, seed=4)
    p = tmp_path / "ba.edges"
    write_edge_list(g, p, header=["n=50"])
    g2 = load_edge_list(p)
    assert g2.edges() == g.edges()
    assert p.read_text().startswith("# n=50\n")


def test_invalid_construction():
    with pytest.raises(ValueError):
        WeightedGraph.from_edges(2, [(0, 1, -1.0)])
    with pytest.raises(ValueError):
        WeightedGraph.from_edges(2, [(0, 2, 1.0)])
    with pytest.raises(ValueError):
        WeightedGraph.from_edges(0, [])


def test_graph_is_read_only():
    g = path(3)
    with pytest.raises(ValueError):
        g.weights[0] = 5.0


@given(weighted_graphs())
def test_symmetry_and_handshake(g):
    assert g.degree().sum() == 2 * g.n_edges
    for u in range(g.n):
        for v, w in zip(*g.neighbors(u)):
            assert g.weight(int(v), u) == w
            assert w > 0 and v != u


def test_ba_edge_count_matches_barabasi_2000():
    g = generate_ba_weighted(2000, 4, seed=0)
    assert g.n == 2000
    # complete 4-node seed adds C(4,2) = 6 edges to the 7984 attachments
    assert abs(g.n_edges - 7984) <= 4**2
    assert g.n_edges == 7984 + 6


def test_ba_forced_complete():
    g = generate_ba_weighted(5, 4, seed=9)
    assert g.n_edges == 10


def test_ba_deterministic_and_weights():
    a = generate_ba_weighted(9000, 4, seed=123)
    b = generate_ba_weighted(9000, 4, seed=123)
    assert a.edges() == b.edges()
    assert set(np.unique(a.weights).tolist()) <= set(range(1, 11))
    assert generate_ba_weighted(9000, 4, seed=124).edges() != a.edges()


def test_ba_max_degree_grows():
    small = generate_ba_weighted(200, 3, seed=1).degree().max()
    large = generate_ba_weighted(5000, 3, seed=1).degree().max()
    assert large > small


@pytest.mark.parametrize("n, m", [(4, 4), (3, 5), (5, 0)])
def test_ba_parameter_errors(n, m):
    with pytest.raises(ValueError):
        generate_ba_weighted(n, m, seed=0)


def test_neighbors_within_hops_examples():
    assert neighbors_within_hops(path(5), 0, 3) == [(1, 1), (2, 2), (3, 3)]
    assert neighbors_within_hops(star(4), 0, 3) == [(i, 1) for i in range(1, 5)]
    assert neighbors_within_hops(path(5), 2, 0) == []
    with pytest.raises(IndexError):
        neighbors_within_hops(path(5), 5, 1)


@given(weighted_graphs(), st.integers(0, 4), st.data())
@settings(max_examples=60)
def test_hop_sets_nested(g, h, data):
    s = data.draw(st.integers(0, g.n - 1))
    inner = neighbors_within_hops(g, s, h)
    outer = neighbors_within_hops(g, s, h + 1)
    assert set(inner) <= set(outer)
    hops = [d for _, d in outer]
    assert hops == sorted(hops)
