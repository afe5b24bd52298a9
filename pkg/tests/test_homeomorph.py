import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geodetic_lab.errors import DomainMismatch, MultiEdgeCollapse, NoNodes, NotMooreBase, PendantVertex
from geodetic_lab.graph import complete, cycle, from_edge_list, petersen
from geodetic_lab.homeomorph import (
    LengthVector,
    Skeleton,
    check_all_conditions,
    check_c1,
    check_c2,
    check_c3,
    format_lengths,
    lengths_from_json,
    lengths_to_json,
    parse_lengths,
    realize,
    segment_cycles,
    segment_paths,
    skeletonize,
)
from geodetic_lab.diophantine.oracle import scan_vectors
from geodetic_lab.diophantine.solver import solve_constraints
from geodetic_lab.diophantine.system import build_system
from geodetic_lab.paths import distance_data
from geodetic_lab.predicates import is_geodetic

from conftest import naive_cycles, to_nx

PET = Skeleton.named("petersen")
K4 = Skeleton.named("k4")


def one_long(m, e, length):
    vals = [1] * m
    vals[e] = length
    return LengthVector(tuple(vals))


def test_skeleton_requires_nodes():
    with pytest.raises(NoNodes):
        Skeleton(cycle(5), 2)
    with pytest.raises(NotMooreBase):
        Skeleton.moore(from_edge_list([(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 3), (3, 4), (4, 1), (4, 2)], 5))


def test_length_vector_positive():
    with pytest.raises(ValueError):
        LengthVector((1, 0))


def test_realize_examples():
    assert realize(PET, LengthVector.ones(15)) == petersen()
    g = realize(PET, one_long(15, 0, 2))
    assert (g.n, g.edge_count) == (11, 16)
    assert realize(K4, LengthVector((3,) * 6)).n == 16
    with pytest.raises(DomainMismatch):
        realize(PET, LengthVector.ones(14))


def test_skeletonize_examples():
    base, lv = skeletonize(realize(PET, one_long(15, 4, 2)))
    assert base == petersen() and lv == one_long(15, 4, 2)
    with pytest.raises(NoNodes):
        skeletonize(cycle(7))
    base, lv = skeletonize(realize(K4, LengthVector((2,) * 6)))
    assert base == complete(4) and lv.lengths == (2,) * 6


def test_skeletonize_rejects_pendant_and_parallel():
    with pytest.raises(PendantVertex):
        skeletonize(from_edge_list([(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 4)], 5))
    # theta graph: nodes 0 and 1 joined by three parallel segments
    theta = from_edge_list([(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)], 5)
    with pytest.raises(MultiEdgeCollapse) as info:
        skeletonize(theta)
    assert info.value.pair == (0, 1)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([PET, K4]), st.data())
def test_roundtrip_and_closed_forms(sk, data):
    lv = LengthVector(tuple(data.draw(st.lists(st.integers(1, 5), min_size=sk.edge_count,
                                                 max_size=sk.edge_count))))
    g = realize(sk, lv)
    assert g.n == sk.base.n + sum(x - 1 for x in lv)
    assert g.edge_count == sum(lv)
    base, back = skeletonize(g)
    assert base == sk.base
    assert back == lv
    assert nx.is_isomorphic(to_nx(realize(sk, back)), to_nx(g))


@pytest.mark.parametrize("sk,m", [(PET, 5), (PET, 6), (K4, 3), (K4, 4), (PET, 8)])
def test_segment_cycles_match_naive(sk, m):
    got = segment_cycles(sk, m)
    as_sets = [frozenset(frozenset(sk.base.edges[e]) for e in c.edges) for c in got]
    assert len(as_sets) == len(set(as_sets))
    assert set(as_sets) == naive_cycles(sk.base, m)


def test_segment_cycle_counts():
    assert len(naive_cycles(petersen(), 5)) == 12
    assert len(naive_cycles(petersen(), 6)) == 10
    assert len(segment_cycles(PET, 5)) == 12
    assert len(segment_cycles(PET, 6)) == 10
    assert len(segment_cycles(K4, 3)) == 4


def test_segment_cycles_on_random_graphs():
    rng = random.Random(3)
    for _ in range(15):
        n = rng.randint(4, 9)
        g = from_edge_list([(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5], n)
        for m in range(3, min(n, 6) + 1):
            from geodetic_lab.homeomorph import simple_cycles

            got = [frozenset(frozenset(g.edges[e]) for e in c.edges) for c in simple_cycles(g, m)]
            assert len(got) == len(set(got))
            assert set(got) == naive_cycles(g, m)


def test_segment_paths():
    paths = segment_paths(PET, 2)
    assert len(paths) == 10 * 3
    assert len({p.vertices for p in paths}) == 30
    assert all(p.vertices[0] < p.vertices[-1] for p in paths)
    assert len(segment_paths(K4, 1)) == 6


def test_c1_examples():
    assert check_c1(PET, LengthVector.ones(15))
    verdict = check_c1(PET, one_long(15, 0, 5))
    assert not verdict
    assert all(0 in p.edges for p, _, _ in verdict.witnesses)
    assert check_c1(K4, LengthVector.ones(6))


def test_c2_examples():
    assert check_c2(PET, LengthVector.ones(15))
    v = check_c2(PET, one_long(15, 0, 2))
    assert not v and all(c.total(one_long(15, 0, 2)) == 6 for c in v.witnesses)
    assert check_c2(PET, one_long(15, 0, 3))


def test_c3_examples():
    assert check_c3(PET, LengthVector.ones(15))
    # every Petersen edge lies on 4 of the 10 hexagons (naive count)
    hexes = naive_cycles(petersen(), 6)
    e0 = frozenset(petersen().edges[0])
    assert sum(1 for h in hexes if e0 in h) == 4
    v = check_c3(PET, one_long(15, 0, 3))
    assert not v
    assert v.detail["sums"] == {6: 6, 8: 4}
    assert check_c3(K4, LengthVector((2,) * 6))
    assert check_c3(K4, LengthVector((2,) * 6)).detail["sums"] == {8: 3}


def test_all_conditions_examples():
    r = check_all_conditions(PET, LengthVector.ones(15))
    assert r.conditions_hold and r.geodetic and r.diameter == 2
    r = check_all_conditions(PET, one_long(15, 0, 2))
    assert not r.c2.passed and not r.geodetic
    g = realize(PET, one_long(15, 0, 2))
    assert (distance_data(g, cap=None).geo_count >= 2).any()
    r = check_all_conditions(K4, LengthVector.ones(6))
    assert r.conditions_hold and r.geodetic and r.diameter == 1


def _conditions_space(sk, max_len):
    system = build_system(sk, max_len, upper=max_len)
    return [lv for lv in solve_constraints(system) if check_c1(sk, lv).passed]


@pytest.mark.parametrize("sk", [K4, PET], ids=["k4", "petersen"])
def test_sufficiency_bounded(sk):
    """c1 & c2 & c3 implies geodetic, for every vector with lengths <= 4."""
    satisfying = _conditions_space(sk, 4)
    assert satisfying
    for lv in satisfying:
        assert is_geodetic(realize(sk, lv)).geodetic, lv


def test_constraint_solver_complete_on_k4():
    from itertools import product

    system = build_system(K4, 4, upper=4)
    brute = [
        t for t in product(range(1, 5), repeat=6)
        if check_c2(K4, LengthVector(t)) and check_c3(K4, LengthVector(t))
    ]
    assert [lv.lengths for lv in solve_constraints(system)] == sorted(brute)


@pytest.mark.parametrize("sk,bound", [(K4, 5), (PET, 3)], ids=["k4", "petersen"])
def test_necessity_bounded(sk, bound):
    """Every geodetic realization in the box satisfies all three conditions.

    A failure here is a counterexample to the necessity conjecture, not a bug;
    the assertion message carries the witness.
    """
    geodetic = scan_vectors(sk.base, 0, bound, max_candidates=10 ** 8)
    assert geodetic
    counterexamples = []
    for t in geodetic:
        rep = check_all_conditions(sk, LengthVector(t))
        assert rep.geodetic
        if not rep.conditions_hold:
            counterexamples.append({"lengths": list(t), **rep.to_dict()})
    assert counterexamples == []


def test_length_vector_text_and_json():
    lv = one_long(15, 3, 4)
    text = format_lengths(petersen(), lv)
    u, v = petersen().edges[3]
    assert text.splitlines()[3] == f"{u} {v} 4"
    base, back = parse_lengths(text)
    assert base == petersen() and back == lv
    assert parse_lengths(text, petersen())[1] == lv
    base, name, back = lengths_from_json(lengths_to_json("petersen", petersen(), lv))
    assert name == "petersen" and back == lv
    base, name, back = lengths_from_json(lengths_to_json(None, petersen(), lv))
    assert base == petersen() and name is None
    with pytest.raises(DomainMismatch):
        parse_lengths("0 1 2\n", petersen())
