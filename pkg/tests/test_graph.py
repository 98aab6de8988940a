"""Graph construction, weights, degeneracy, and edge-list round trips."""

from random import Random

import pytest
from hypothesis import given

from _util import graphs, random_graph
from edgecolor.generators import gen_forest_union
from edgecolor.graph import (
    DuplicateEdgeError,
    GraphError,
    ParseError,
    SelfLoopError,
    VertexOutOfRangeError,
    build_graph,
    canonical_edge_list,
    degeneracy,
    edge_weight,
    graph_stats,
    graph_weight,
    read_edge_list,
    write_edge_list,
)

TRIANGLE = [(0, 1), (1, 2), (2, 0)]


def test_empty_graph():
    g = build_graph([], 3)
    assert (g.n, g.m, g.max_degree) == (3, 0, 0)
    assert g.degree == [0, 0, 0]


def test_triangle():
    g = build_graph(TRIANGLE, 3)
    assert g.max_degree == 2
    assert g.degree == [2, 2, 2]
    assert g.endpoints[1] == (1, 2)
    # every edge id appears exactly twice across adjacency lists
    seen = [eid for adj in g.adjacency for _, eid in adj]
    assert sorted(seen) == [0, 0, 1, 1, 2, 2]


def test_duplicate_edge_rejected():
    with pytest.raises(DuplicateEdgeError) as err:
        build_graph([(0, 1), (0, 1)], 2)
    assert err.value.index == 1
    with pytest.raises(DuplicateEdgeError):
        build_graph([(0, 1), (1, 0)], 2)  # unordered duplicate


def test_self_loop_rejected():
    with pytest.raises(SelfLoopError) as err:
        build_graph([(0, 1), (2, 2)], 3)
    assert err.value.index == 1
    assert err.value.edge == (2, 2)


def test_vertex_out_of_range_rejected():
    with pytest.raises(VertexOutOfRangeError):
        build_graph([(0, 3)], 3)
    with pytest.raises(VertexOutOfRangeError):
        build_graph([(-1, 0)], 3)


def test_other_endpoint():
    g = build_graph([(4, 2)], 5)
    assert g.other_endpoint(0, 4) == 2
    assert g.other_endpoint(0, 2) == 4
    with pytest.raises(ValueError):
        g.other_endpoint(0, 1)


@given(graphs())
def test_degree_sum_is_twice_m(g):
    assert sum(g.degree) == 2 * g.m
    assert g.max_degree == max(g.degree, default=0)
    assert all(len(g.adjacency[v]) == g.degree[v] for v in range(g.n))


def test_edge_weight_examples():
    star = build_graph([(0, 1), (0, 2), (0, 3)], 4)
    assert [edge_weight(star, e) for e in range(3)] == [1, 1, 1]
    tri = build_graph(TRIANGLE, 3)
    assert [edge_weight(tri, e) for e in range(3)] == [2, 2, 2]
    path = build_graph([(0, 1), (1, 2)], 3)
    assert edge_weight(path, 0) == 1  # min(d=1, d=2)


def test_graph_weight_examples():
    star = build_graph([(0, 1), (0, 2), (0, 3)], 4)
    assert graph_weight(star) == 3
    tri = build_graph(TRIANGLE, 3)
    assert graph_weight(tri) == 6
    assert graph_weight(tri) <= 2 * tri.m * 2  # arboricity 2


def test_graph_weight_forest_union_oracle():
    g = gen_forest_union(10, 2, seed=3)
    # naive per-edge recomputation from adjacency lengths
    naive = sum(min(len(g.adjacency[u]), len(g.adjacency[v])) for u, v in g.endpoints)
    assert graph_weight(g) == naive
    assert graph_weight(g) <= 2 * g.m * 2 <= 72


@given(graphs())
def test_graph_weight_matches_naive(g):
    naive = sum(min(g.degree[u], g.degree[v]) for u, v in g.endpoints)
    assert graph_weight(g) == naive


def _degeneracy_naive(g):
    """Quadratic reference: repeatedly delete a minimum-degree vertex."""
    deg = list(g.degree)
    alive = set(range(g.n))
    best = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        best = max(best, deg[v])
        alive.remove(v)
        for u, _ in g.adjacency[v]:
            if u in alive:
                deg[u] -= 1
    return best


def test_degeneracy_examples():
    forest = build_graph([(0, 1), (1, 2), (3, 4)], 5)
    assert degeneracy(forest) == 1
    assert degeneracy(build_graph(TRIANGLE, 3)) == 2
    k5 = build_graph([(u, v) for u in range(5) for v in range(u + 1, 5)], 5)
    assert degeneracy(k5) == 4
    assert degeneracy(build_graph([], 0)) == 0


@given(graphs())
def test_degeneracy_matches_naive(g):
    assert degeneracy(g) == _degeneracy_naive(g)


def test_degeneracy_matches_naive_larger_seeded():
    for seed in range(10):
        rng = Random(seed)
        n = rng.randrange(10, 40)
        m = rng.randrange(0, n * (n - 1) // 2 + 1)
        g = random_graph(n, m, rng)
        assert degeneracy(g) == _degeneracy_naive(g)


def test_graph_stats():
    tri = build_graph(TRIANGLE, 3)
    s = graph_stats(tri)
    assert (s.max_degree, s.graph_weight, s.degeneracy) == (2, 6, 2)
    assert s.normalized_weight == pytest.approx(2.0)
    empty = graph_stats(build_graph([], 2))
    assert empty.normalized_weight == 0.0


def test_read_edge_list_basic():
    g = read_edge_list("3 2\n0 1\n1 2\n")
    assert canonical_edge_list(g) == [(0, 1), (1, 2)]
    withcomments = read_edge_list("# a path\n\n3 2  # header\n0 1\n\n1 2\n")
    assert canonical_edge_list(withcomments) == [(0, 1), (1, 2)]


def test_read_edge_list_structural_errors():
    with pytest.raises(SelfLoopError):
        read_edge_list("2 1\n0 0\n")
    with pytest.raises(VertexOutOfRangeError):
        read_edge_list("2 1\n0 5\n")


def test_read_edge_list_parse_errors():
    with pytest.raises(ParseError) as err:
        read_edge_list("3 2\n0 1\nbogus line\n")
    assert err.value.line_no == 3
    with pytest.raises(ParseError):
        read_edge_list("")  # missing header
    with pytest.raises(ParseError):
        read_edge_list("3 2\n0 1\n")  # fewer edges than promised
    with pytest.raises(ParseError):
        read_edge_list("3 1\n0 1\n1 2\n")  # more edges than promised
    with pytest.raises(ParseError):
        read_edge_list("3\n")  # header needs two fields
    assert issubclass(ParseError, GraphError)


@given(graphs())
def test_write_read_round_trip(g):
    back = read_edge_list(write_edge_list(g))
    assert back.n == g.n
    assert canonical_edge_list(back) == canonical_edge_list(g)
    # second round trip is byte-identical
    assert write_edge_list(back) == write_edge_list(g)
