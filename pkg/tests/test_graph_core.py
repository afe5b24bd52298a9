import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from geodetic_lab import (
    bfs_counts,
    complete,
    cycle,
    diameter,
    distance_data,
    from_edge_list,
    is_block,
    is_geodetic,
    moore_params,
    path,
    petersen,
    regular_degree,
    strongly_regular_params,
)
from geodetic_lab.errors import Disconnected, InvalidSize, SelfLoop, VertexOutOfRange
from geodetic_lab.graph import by_name
from geodetic_lab.paths import UNREACHABLE
from geodetic_lab.predicates import articulation_points, classify, moore_bound

from conftest import brute_geodesic_counts, naive_cycles, pair_count_srg, small_graphs, to_nx


def test_from_edge_list_path():
    g = from_edge_list([(0, 1), (1, 2)], 3)
    assert g.edge_count == 2
    assert g.adjacency == ((1,), (0, 2), (1,))


def test_from_edge_list_self_loop():
    with pytest.raises(SelfLoop):
        from_edge_list([(0, 0)], 1)


def test_from_edge_list_duplicates_collapse():
    assert from_edge_list([(0, 1), (1, 0)], 2).edge_count == 1


def test_from_edge_list_out_of_range():
    with pytest.raises(VertexOutOfRange):
        from_edge_list([(0, 3)], 3)


@given(small_graphs())
def test_graph_invariants(g):
    for u in range(g.n):
        assert u not in g.adjacency[u]
        assert list(g.adjacency[u]) == sorted(set(g.adjacency[u]))
        for v in g.adjacency[u]:
            assert u in g.adjacency[v]
    assert g.edge_count == sum(map(len, g.adjacency)) // 2


def test_bfs_c4_opposite_vertex():
    dist, count = bfs_counts(cycle(4), 0)
    assert dist[2] == 2 and count[2] == 2


def test_bfs_c5_unique():
    dist, count = bfs_counts(cycle(5), 0, cap=None)
    assert all(c == 1 for c in count)


def test_bfs_petersen_matches_path_enumeration():
    g = petersen()
    brute = brute_geodesic_counts(g)
    dist, count = bfs_counts(g, 0, cap=None)
    assert max(dist) == 2
    for v in range(10):
        assert (dist[v], count[v]) == brute[(0, v)]
    assert all(c == 1 for c in count)


def test_distance_data_k3_and_disconnected():
    dd = distance_data(complete(3))
    assert (dd.dist + np.eye(3, dtype=int) == 1).all()
    assert (dd.geo_count == 1).all()
    dd = distance_data(from_edge_list([], 2))
    assert dd.dist[0, 1] == UNREACHABLE and dd.geo_count[0, 1] == 0


def test_distance_data_read_only():
    dd = distance_data(petersen())
    with pytest.raises(ValueError):
        dd.dist[0, 0] = 5
    assert dd.max_distance() == 2


@settings(max_examples=150, deadline=None)
@given(small_graphs(max_n=7))
def test_geodesic_counts_match_exhaustive_paths(g):
    brute = brute_geodesic_counts(g)
    dd = distance_data(g, cap=None)
    for (u, v), (d, c) in brute.items():
        assert dd.dist[u, v] == d
        assert dd.geo_count[u, v] == c


@settings(max_examples=150, deadline=None)
@given(small_graphs(max_n=7, connected=True))
def test_is_geodetic_matches_exhaustive_paths(g):
    brute = brute_geodesic_counts(g)
    expected = all(c == 1 for c in (c for _, c in brute.values()))
    verdict = is_geodetic(g)
    assert verdict.geodetic == expected
    if not expected:
        u, v = verdict.witness
        assert brute[(u, v)][1] >= 2


@settings(max_examples=100, deadline=None)
@given(small_graphs(max_n=8))
def test_distance_data_invariants(g):
    dd = distance_data(g)
    d = dd.dist
    assert (d == d.T).all() and (np.diag(d) == 0).all()
    assert (np.diag(dd.geo_count) == 1).all()
    finite = d != UNREACHABLE
    assert ((dd.geo_count >= 1) == finite).all()
    for v in range(g.n):
        via = d[:, [v]] + d[[v], :]
        ok = ~finite | ~finite[:, [v]] | ~finite[[v], :] | (d <= via)
        assert ok.all()


def _predicates(g, cap):
    dd = distance_data(g, cap=cap)
    if not dd.connected:
        return None
    return (is_geodetic(g, dd).geodetic, moore_params(g, dd), dd.max_distance())


def test_count_cap_changes_no_predicate():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(2, 14)
        p = rng.choice([0.2, 0.35, 0.5, 0.8])
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = from_edge_list(edges, n)
        assert _predicates(g, 2) == _predicates(g, None)


def test_diameter_examples(hs):
    assert diameter(complete(5)) == 1
    assert diameter(cycle(5)) == 2
    assert diameter(hs) == 2
    assert diameter(path(1)) == 0
    with pytest.raises(Disconnected):
        diameter(from_edge_list([], 2))


def test_is_geodetic_examples(hs):
    assert is_geodetic(from_edge_list([(0, 1), (0, 2), (2, 3), (2, 4)], 5))
    v = is_geodetic(cycle(4))
    assert not v.geodetic
    u, w = v.witness
    assert abs(u - w) == 2
    assert is_geodetic(hs)
    with pytest.raises(Disconnected):
        is_geodetic(from_edge_list([(0, 1)], 3))


@pytest.mark.parametrize("n", range(3, 16))
def test_cycle_parity(n):
    assert is_geodetic(cycle(n)).geodetic == (n % 2 == 1)


def test_regular_degree():
    assert regular_degree(petersen()) == 3
    assert regular_degree(path(3)) is None
    assert regular_degree(complete(4)) == 3


def test_srg_examples(hs):
    assert strongly_regular_params(petersen()).as_tuple() == pair_count_srg(petersen()) == (10, 3, 0, 1)
    assert strongly_regular_params(cycle(5)).as_tuple() == pair_count_srg(cycle(5)) == (5, 2, 0, 1)
    assert strongly_regular_params(complete(4)) is None
    assert strongly_regular_params(from_edge_list([], 4)) is None
    assert strongly_regular_params(hs).as_tuple() == (50, 7, 0, 1)


@settings(max_examples=100, deadline=None)
@given(small_graphs(max_n=8))
def test_srg_identity_and_agreement(g):
    p = strongly_regular_params(g)
    if p is not None:
        assert p.feasible()
        assert p.as_tuple() == pair_count_srg(g)


def test_moore_examples(hs):
    assert (moore_params(petersen()).k, moore_params(petersen()).d) == (3, 2)
    assert (moore_params(hs).k, moore_params(hs).d) == (7, 2)
    assert (moore_params(cycle(5)).k, moore_params(cycle(5)).d) == (2, 2)
    for n in range(2, 11):
        p = moore_params(complete(n))
        assert (p.k, p.d) == (n - 1, 1)
    assert moore_params(cycle(6)) is None
    assert moore_params(complete(1)) is None
    assert moore_bound(3, 2) == 1 + 3 * (1 + 2) == 10
    assert moore_bound(7, 2) == 1 + 7 * (1 + 6) == 50


@settings(max_examples=100, deadline=None)
@given(small_graphs(max_n=8, connected=True))
def test_moore_identity(g):
    p = moore_params(g)
    if p is not None:
        assert g.n == 1 + p.k * sum((p.k - 1) ** (j - 1) for j in range(1, p.d + 1))


def test_block_examples():
    assert is_block(complete(4))
    assert not is_block(path(3))
    assert is_block(petersen())
    assert articulation_points(petersen()) == []
    assert not is_block(complete(2))


@settings(max_examples=150, deadline=None)
@given(small_graphs(min_n=3, max_n=8))
def test_block_matches_networkx(g):
    assert is_block(g) == nx.is_biconnected(to_nx(g))


def test_builders():
    p = petersen()
    assert (p.n, p.edge_count) == (10, 15)
    assert not naive_cycles(p, 3) and not naive_cycles(p, 4) and naive_cycles(p, 5)
    assert is_geodetic(cycle(5))
    for bad in (lambda: cycle(2), lambda: path(0), lambda: complete(0)):
        with pytest.raises(InvalidSize):
            bad()
    assert nx.is_isomorphic(to_nx(p), nx.petersen_graph())


def test_hoffman_singleton_matches_networkx(hs):
    assert nx.is_isomorphic(to_nx(hs), nx.hoffman_singleton_graph())


def test_builtin_moore_graphs_geodetic_blocks(hs):
    for g in [cycle(5), petersen(), hs] + [complete(n) for n in range(3, 11)]:
        assert is_geodetic(g) and is_block(g)


def test_by_name():
    assert by_name("k5").edge_count == 10
    assert by_name("cycle7").n == 7
    assert by_name("path4").edge_count == 3
    with pytest.raises(KeyError):
        by_name("dodecahedron")


def test_classify_disconnected():
    rec = classify(from_edge_list([(0, 1)], 3))
    assert rec["connected"] is False and rec["geodetic"] is False and rec["diameter"] is None
