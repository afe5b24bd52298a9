"""Structural predicates: geodetic, regular, strongly regular, Moore, block."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from geodetic_lab.graph import Graph
from geodetic_lab.paths import DistanceData, distance_data, require_connected


@dataclass(frozen=True)
class GeodeticVerdict:
    geodetic: bool
    witness: tuple[int, int] | None = None

    def __bool__(self):
        return self.geodetic


@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    lam: int
    mu: int

    def feasible(self) -> bool:
        return self.k * (self.k - self.lam - 1) == (self.n - self.k - 1) * self.mu

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.lam, self.mu)


@dataclass(frozen=True)
class MooreParams:
    k: int
    d: int

    @property
    def order(self) -> int:
        return moore_bound(self.k, self.d)


def moore_bound(k: int, d: int) -> int:
    """``1 + k * sum_{j=1..d} (k-1)^(j-1)``."""
    return 1 + k * sum((k - 1) ** (j - 1) for j in range(1, d + 1))


def is_geodetic(g: Graph, dd: DistanceData | None = None) -> GeodeticVerdict:
    """Unique shortest path between every pair; the witness is the first pair that has two."""
    if dd is None:
        dd = distance_data(g)
    require_connected(dd)
    bad = np.argwhere(dd.geo_count >= 2)
    if bad.size:
        u, v = (int(x) for x in bad[0])
        return GeodeticVerdict(False, (u, v))
    return GeodeticVerdict(True)


def regular_degree(g: Graph) -> int | None:
    degs = set(g.degrees())
    if len(degs) == 1:
        return degs.pop()
    return None


def strongly_regular_params(g: Graph) -> SrgParams | None:
    """SRG parameters, or ``None``. Complete and edgeless graphs are not counted as SRGs."""
    k = regular_degree(g)
    if k is None or k == 0 or k == g.n - 1:
        return None
    nbrs = [set(a) for a in g.adjacency]
    lam = mu = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = len(nbrs[u] & nbrs[v])
            if v in nbrs[u]:
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    return SrgParams(g.n, k, lam, mu)


def moore_params(g: Graph, dd: DistanceData | None = None) -> MooreParams | None:
    if dd is None:
        dd = distance_data(g)
    require_connected(dd)
    k = regular_degree(g)
    if k is None or k < 1:
        return None
    d = dd.max_distance()
    if d < 1 or moore_bound(k, d) != g.n:
        return None
    return MooreParams(k, d)


def articulation_points(g: Graph) -> list[int]:
    """Cut vertices by iterative Hopcroft-Tarjan lowpoints."""
    disc = [-1] * g.n
    low = [0] * g.n
    cut = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if disc[v] == -1:
                    disc[v] = low[v] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((v, u, iter(g.adjacency[v])))
                    advanced = True
                    break
                if v != parent:
                    low[u] = min(low[u], disc[v])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[u])
                if parent != root and low[u] >= disc[parent]:
                    cut.add(parent)
        if root_children > 1:
            cut.add(root)
    return sorted(cut)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        for v in g.adjacency[stack.pop()]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == g.n


def is_block(g: Graph) -> bool:
    """2-connected: connected, at least 3 vertices, no cut vertex. ``K2`` is not a block here."""
    if g.n < 3:
        return False
    return is_connected(g) and not articulation_points(g)


def classify(g: Graph) -> dict:
    """Per-graph classification record used by the stream filter and the CLI."""
    dd = distance_data(g)
    connected = dd.connected
    srg = strongly_regular_params(g)
    out = {
        "n": g.n,
        "edges": g.edge_count,
        "connected": connected,
        "geodetic": False,
        "strongly_regular": srg is not None,
        "srg_params": list(srg.as_tuple()) if srg else None,
        "moore": False,
        "moore_params": None,
        "block": is_block(g) if g.n >= 2 else False,
        "diameter": None,
    }
    if connected:
        out["geodetic"] = is_geodetic(g, dd).geodetic
        mp = moore_params(g, dd)
        out["moore"] = mp is not None
        out["moore_params"] = [mp.k, mp.d] if mp else None
        out["diameter"] = dd.max_distance()
    return out
