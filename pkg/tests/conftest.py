"""Independent oracles shared across the suite.

Nothing here calls into the BFS, cycle or automorphism code it is used to check.
"""

from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import strategies as st

from geodetic_lab.graph import from_edge_list


def all_simple_paths(adj, u, v):
    """Every simple u-v path, by plain DFS over vertex sequences."""
    out = []

    def walk(path):
        x = path[-1]
        if x == v:
            out.append(tuple(path))
            return
        for y in adj[x]:
            if y not in path:
                path.append(y)
                walk(path)
                path.pop()

    walk([u])
    return out


def brute_geodesic_counts(g):
    """``{(u, v): (distance, number of shortest paths)}`` for every ordered pair, by path enumeration."""
    adj = [set(a) for a in g.adjacency]
    res = {}
    for u in range(g.n):
        for v in range(g.n):
            if u == v:
                res[(u, v)] = (0, 1)
                continue
            paths = all_simple_paths(adj, u, v)
            if not paths:
                res[(u, v)] = (-1, 0)
                continue
            best = min(len(p) for p in paths)
            res[(u, v)] = (best - 1, sum(1 for p in paths if len(p) == best))
    return res


def naive_cycles(g, m):
    """Simple m-cycles as frozensets of edges, by trying every ordered vertex tuple."""
    found = set()
    for verts in permutations(range(g.n), m):
        if verts[0] != min(verts):
            continue
        if all(g.has_edge(verts[i], verts[(i + 1) % m]) for i in range(m)):
            found.add(frozenset(frozenset((verts[i], verts[(i + 1) % m])) for i in range(m)))
    return found


def pair_count_srg(g):
    """SRG parameters by counting common neighbours of every pair with sets (no shortcuts)."""
    nb = {v: set(g.adjacency[v]) for v in range(g.n)}
    degs = {len(s) for s in nb.values()}
    lam = {len(nb[u] & nb[v]) for u, v in combinations(range(g.n), 2) if v in nb[u]}
    mu = {len(nb[u] & nb[v]) for u, v in combinations(range(g.n), 2) if v not in nb[u]}
    if len(degs) != 1 or len(lam) != 1 or len(mu) != 1:
        return None
    return (g.n, degs.pop(), lam.pop(), mu.pop())


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h):
    mapping = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return from_edge_list([(mapping[u], mapping[v]) for u, v in h.edges()], h.number_of_nodes())


def nx_automorphism_count(g):
    h = to_nx(g)
    return sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(h, h).isomorphisms_iter())


@st.composite
def small_graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        order = draw(st.permutations(range(n)))
        for i in range(1, n):
            j = draw(st.integers(0, i - 1))
            a, b = sorted((order[i], order[j]))
            chosen.append((a, b))
    return from_edge_list(chosen, n)


@pytest.fixture(scope="session")
def hs():
    from geodetic_lab.graph import hoffman_singleton

    return hoffman_singleton()


_CRITERIA = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_CRITERIA] = {}


class CriterionLog:
    """Collects per-criterion outcomes so the run ends with one pass/fail line each."""

    def __init__(self, store):
        self._store = store

    def record(self, number, ok, detail):
        prev = self._store.get(number)
        if prev is not None:
            ok = ok and prev[0]
            detail = f"{prev[1]}; {detail}"
        self._store[number] = (ok, detail)


@pytest.fixture
def criteria(request):
    return CriterionLog(request.config.stash[_CRITERIA])


def pytest_terminal_summary(terminalreporter, config):
    store = config.stash.get(_CRITERIA, {})
    if not store:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(store):
        ok, detail = store[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
