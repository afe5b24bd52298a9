"""Brute-force enumeration of every length vector in ``[1, bound]^E``.

No constraint filtering: each candidate is subdivided, then checked for unique
shortest paths and diameter by BFS from every vertex. The scan runs in a
compiled kernel; vectors are numbered in mixed radix with edge 0 as the most
significant digit, so index order is lexicographic order.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from geodetic_lab.diophantine.checkpoint import Checkpoint
from geodetic_lab.diophantine.runner import Budget, run_units
from geodetic_lab.errors import BudgetExceeded
from geodetic_lab.graph import Graph

CHUNK = 1 << 18
DEFAULT_MAX_CANDIDATES = 50_000_000


@njit(cache=True)
def _realized_ok(eu, ev, nb, lengths, target_d, deg, adj, dist, queue):
    # subdivide into adjacency rows
    n = nb
    for v in range(nb):
        deg[v] = 0
    for e in range(eu.shape[0]):
        prev = eu[e]
        for _ in range(lengths[e] - 1):
            deg[n] = 0
            adj[prev, deg[prev]] = n
            deg[prev] += 1
            adj[n, deg[n]] = prev
            deg[n] += 1
            prev = n
            n += 1
        v = ev[e]
        adj[prev, deg[prev]] = v
        deg[prev] += 1
        adj[v, deg[v]] = prev
        deg[v] += 1
    diam = 0
    for src in range(n):
        for v in range(n):
            dist[v] = -1
        dist[src] = 0
        head = 0
        tail = 1
        queue[0] = src
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u] + 1
            for j in range(deg[u]):
                w = adj[u, j]
                if dist[w] == -1:
                    if 0 < target_d < du:
                        return False
                    dist[w] = du
                    queue[tail] = w
                    tail += 1
                elif dist[w] == du:
                    # second shortest path into w
                    return False
        if tail < n:
            return False
        if dist[queue[tail - 1]] > diam:
            diam = dist[queue[tail - 1]]
    return target_d <= 0 or diam == target_d


@njit(cache=True)
def _scan(eu, ev, nb, bound, target_d, start, stop, maxdeg):
    m = eu.shape[0]
    maxn = nb + m * (bound - 1)
    deg = np.zeros(maxn, dtype=np.int64)
    adj = np.zeros((maxn, maxdeg), dtype=np.int64)
    dist = np.zeros(maxn, dtype=np.int64)
    queue = np.zeros(maxn, dtype=np.int64)
    lengths = np.zeros(m, dtype=np.int64)
    rem = start
    for e in range(m - 1, -1, -1):
        lengths[e] = rem % bound + 1
        rem //= bound
    hits = np.empty(stop - start, dtype=np.int64)
    k = 0
    for idx in range(start, stop):
        if _realized_ok(eu, ev, nb, lengths, target_d, deg, adj, dist, queue):
            hits[k] = idx
            k += 1
        e = m - 1
        while e >= 0:
            lengths[e] += 1
            if lengths[e] <= bound:
                break
            lengths[e] = 1
            e -= 1
    return hits[:k]


def decode(index: int, m: int, bound: int) -> tuple[int, ...]:
    digits = []
    for _ in range(m):
        index, r = divmod(index, bound)
        digits.append(r + 1)
    return tuple(reversed(digits))


def _scan_unit(payload, start, stop, deadline, max_nodes):
    edges, nb, bound, target_d, maxdeg = payload
    eu = np.ascontiguousarray(edges[:, 0])
    ev = np.ascontiguousarray(edges[:, 1])
    hits = _scan(eu, ev, nb, bound, target_d, start, stop, maxdeg)
    m = edges.shape[0]
    return [decode(int(i), m, bound) for i in hits]


def scan_vectors(base: Graph, target_d: int, bound: int, workers: int = 1,
                 budget: Budget | None = None, checkpoint=None,
                 max_candidates: int = DEFAULT_MAX_CANDIDATES, base_name: str = "custom") -> list[tuple[int, ...]]:
    """Every vector in ``[1, bound]^E`` whose subdivision is geodetic with diameter exactly ``target_d``.

    ``target_d <= 0`` drops the diameter requirement.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    m = base.edge_count
    total = bound ** m
    if total > max_candidates:
        raise BudgetExceeded(f"{total} candidates exceed the limit of {max_candidates}",
                             progress={"completed": [], "solutions": {}})
    edges = np.array(base.edges, dtype=np.int64).reshape(-1, 2)
    maxdeg = max(max(base.degrees(), default=0), 2)
    payload = (edges, base.n, bound, target_d, maxdeg)
    units = [(f"{a}-{min(a + CHUNK, total)}", (a, min(a + CHUNK, total))) for a in range(0, total, CHUNK)]
    cp = None
    if checkpoint is not None:
        cp = Checkpoint.open(checkpoint, base_name, target_d, bound, "exhaustive")
    return sorted(run_units(_scan_unit, payload, units, workers, cp, budget))
