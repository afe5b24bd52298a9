"""Breadth-first search with shortest-path multiplicities."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from geodetic_lab.errors import Disconnected, VertexOutOfRange
from geodetic_lab.graph import Graph

UNREACHABLE = -1

# Multiplicities saturate here by default: uniqueness is all the predicates ask about.
COUNT_CAP = 2


def bfs_counts(g: Graph, source: int, cap: int | None = COUNT_CAP) -> tuple[list[int], list[int]]:
    """Hop distances and geodesic counts from ``source``.

    ``count[v]`` is the number of shortest ``source``-``v`` paths, saturated at
    ``cap`` (pass ``cap=None`` for exact counts). Unreachable vertices get
    distance ``UNREACHABLE`` and count 0.
    """
    if not 0 <= source < g.n:
        raise VertexOutOfRange(f"source {source} outside 0..{g.n - 1}")
    dist = [UNREACHABLE] * g.n
    count = [0] * g.n
    dist[source] = 0
    count[source] = 1
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        cu = count[u]
        for v in adj[u]:
            dv = dist[v]
            if dv == UNREACHABLE:
                dist[v] = du
                count[v] = cu
                queue.append(v)
            elif dv == du:
                c = count[v] + cu
                count[v] = c if cap is None or c < cap else cap
    return dist, count


@dataclass(frozen=True)
class DistanceData:
    """All-pairs hop distances (``dist``) and geodesic multiplicities (``geo_count``).

    Both are read-only ``n x n`` integer arrays.
    """

    dist: np.ndarray
    geo_count: np.ndarray

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    @property
    def connected(self) -> bool:
        return bool((self.dist != UNREACHABLE).all())

    def max_distance(self) -> int:
        finite = self.dist[self.dist != UNREACHABLE]
        return int(finite.max()) if finite.size else 0


def distance_data(g: Graph, cap: int | None = COUNT_CAP) -> DistanceData:
    dtype = np.int64 if cap is not None else object
    dist = np.empty((g.n, g.n), dtype=np.int64)
    counts = np.empty((g.n, g.n), dtype=dtype)
    for s in range(g.n):
        d, c = bfs_counts(g, s, cap)
        dist[s] = d
        counts[s] = c
    dist.flags.writeable = False
    counts.flags.writeable = False
    return DistanceData(dist, counts)


def require_connected(dd: DistanceData) -> None:
    if not dd.connected:
        u, v = (int(x) for x in np.argwhere(dd.dist == UNREACHABLE)[0])
        raise Disconnected(f"no path between {u} and {v}")


def diameter(g: Graph, dd: DistanceData | None = None) -> int:
    """Largest pairwise distance; raises :class:`Disconnected` if some pair has none."""
    if dd is None:
        dd = distance_data(g)
    require_connected(dd)
    return dd.max_distance()
