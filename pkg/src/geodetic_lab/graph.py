"""Immutable simple undirected graphs on vertices ``0..n-1``, plus the named constructors."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from geodetic_lab.errors import InvalidSize, SelfLoop, VertexOutOfRange


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted adjacency tuples.

    Build instances with :func:`from_edge_list` or the constructors below; the
    raw constructor trusts its input.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edge_count: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "edge_count", sum(len(a) for a in self.adjacency) // 2)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(u, v)`` with ``u < v``, sorted; this is the canonical edge order."""
        return tuple((u, v) for u in range(self.n) for v in self.adjacency[u] if u < v)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        idx = {}
        for i, (u, v) in enumerate(self.edges):
            idx[(u, v)] = i
            idx[(v, u)] = i
        return idx

    @cached_property
    def _adjacent_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjacent_sets[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def __repr__(self):
        return f"Graph(n={self.n}, edge_count={self.edge_count})"


def from_edge_list(edges: Iterable[Sequence[int]], n: int) -> Graph:
    """Normalize an edge list into a :class:`Graph`.

    Duplicate edges collapse to one. Self-loops raise :class:`SelfLoop` instead
    of being dropped.
    """
    if n < 0:
        raise InvalidSize(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(u)
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled in the given order."""
    pos = {v: i for i, v in enumerate(vertices)}
    edges = [(pos[u], pos[v]) for u in vertices for v in g.adjacency[u] if v in pos and u < v]
    return from_edge_list(edges, len(vertices))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidSize(f"cycle needs n >= 3, got {n}")
    return from_edge_list([(i, (i + 1) % n) for i in range(n)], n)


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidSize(f"path needs n >= 1, got {n}")
    return from_edge_list([(i, i + 1) for i in range(n - 1)], n)


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidSize(f"complete graph needs n >= 1, got {n}")
    return from_edge_list([(i, j) for i in range(n) for j in range(i + 1, n)], n)


def petersen() -> Graph:
    """Outer 5-cycle on 0..4, inner pentagram on 5..9, spokes ``i -- i+5``."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((i + 5, (i + 2) % 5 + 5))
    return from_edge_list(edges, 10)


def hoffman_singleton() -> Graph:
    """Robertson's pentagon/pentagram construction on 50 vertices.

    Pentagon ``h`` occupies ``5h..5h+4`` and pentagram ``k`` occupies
    ``25+5k..25+5k+4``. Vertex ``j`` of pentagon ``h`` is joined to vertex
    ``(h*k + j) % 5`` of pentagram ``k``. The result is checked to be the
    (7, 2) Moore graph before it is returned.
    """
    from geodetic_lab.predicates import moore_params

    def pent(h, j):
        return 5 * h + j

    def star(k, j):
        return 25 + 5 * k + j

    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((pent(h, j), pent(h, (j + 1) % 5)))
            edges.append((star(h, j), star(h, (j + 2) % 5)))
            for k in range(5):
                edges.append((pent(h, j), star(k, (h * k + j) % 5)))
    g = from_edge_list(edges, 50)
    params = moore_params(g)
    if params is None or (params.k, params.d) != (7, 2):
        raise AssertionError(f"Hoffman-Singleton construction failed self-check: {params}")
    return g


def by_name(name: str) -> Graph:
    """Resolve a built-in name: c5, petersen, hoffman-singleton, k<n>, cycle<n>, path<n>."""
    key = name.strip().lower()
    if key == "c5":
        return cycle(5)
    if key == "petersen":
        return petersen()
    if key in ("hoffman-singleton", "hoffman_singleton", "hs"):
        return hoffman_singleton()
    for prefix, ctor in (("cycle", cycle), ("path", path), ("k", complete)):
        rest = key[len(prefix):]
        if key.startswith(prefix) and rest.isdigit():
            return ctor(int(rest))
    raise KeyError(f"unknown built-in graph {name!r}")


BUILTIN_NAMES = ("c5", "petersen", "hoffman-singleton", "k<n>", "cycle<n>", "path<n>")
