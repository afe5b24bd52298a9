import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geodetic_lab.automorphisms import automorphisms, canonical_lengths, orbit_size
from geodetic_lab.errors import TooLarge
from geodetic_lab.graph import complete, cycle, from_edge_list, petersen
from geodetic_lab.homeomorph import LengthVector

from conftest import nx_automorphism_count, small_graphs

PET_GROUP = automorphisms(petersen())


def test_orders():
    assert automorphisms(complete(4)).order == 24
    assert PET_GROUP.order == 120
    assert automorphisms(cycle(5)).order == 10


def test_petersen_order_by_orbit_stabilizer():
    perms = PET_GROUP.perms
    orbit = {int(p[0]) for p in perms}
    stab = sum(1 for p in perms if p[0] == 0)
    assert len(orbit) * stab == 120 == nx_automorphism_count(petersen())


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=7))
def test_order_matches_networkx(g):
    grp = automorphisms(g)
    assert grp.order == nx_automorphism_count(g)
    for p in grp.perms:
        for u, v in g.edges:
            assert g.has_edge(int(p[u]), int(p[v]))


def test_too_large():
    with pytest.raises(TooLarge):
        automorphisms(cycle(61))
    with pytest.raises(TooLarge):
        automorphisms(complete(6), limit=100)


def test_edge_action_is_consistent():
    g = petersen()
    for p, ea in zip(PET_GROUP.perms, PET_GROUP.edge_action):
        for e, (u, v) in enumerate(g.edges):
            assert g.edge_index[(int(p[u]), int(p[v]))] == ea[e]


def test_canonical_all_ones_fixed():
    ones = LengthVector.ones(15)
    assert canonical_lengths(petersen(), ones, PET_GROUP) == ones
    assert orbit_size(ones, PET_GROUP) == 1


def test_single_long_edge_is_edge_transitive():
    forms = set()
    for e in range(15):
        vals = [1] * 15
        vals[e] = 2
        forms.add(canonical_lengths(petersen(), LengthVector(tuple(vals)), PET_GROUP))
    assert len(forms) == 1
    # orbit of one marked edge = all 15 edges
    assert orbit_size(next(iter(forms)), PET_GROUP) == 15


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=15, max_size=15), st.integers(0, 119))
def test_canonical_idempotent_and_orbit_constant(values, gi):
    lv = LengthVector(tuple(values))
    c = canonical_lengths(petersen(), lv, PET_GROUP)
    assert canonical_lengths(petersen(), c, PET_GROUP) == c
    moved = [0] * 15
    for e, img in enumerate(PET_GROUP.edge_action[gi]):
        moved[img] = values[e]
    assert canonical_lengths(petersen(), LengthVector(tuple(moved)), PET_GROUP) == c
    assert c.lengths <= lv.lengths


def test_canonical_realizations_isomorphic():
    import networkx as nx
    from geodetic_lab.homeomorph import realize, Skeleton

    from conftest import to_nx

    sk = Skeleton.named("petersen")
    rng = random.Random(11)
    for _ in range(20):
        lv = LengthVector(tuple(rng.randint(1, 3) for _ in range(15)))
        c = canonical_lengths(petersen(), lv, PET_GROUP)
        assert nx.is_isomorphic(to_nx(realize(sk, lv)), to_nx(realize(sk, c)))


def test_disconnected_graph_group():
    g = from_edge_list([(0, 1), (2, 3)], 5)
    assert automorphisms(g).order == nx_automorphism_count(g) == 8
