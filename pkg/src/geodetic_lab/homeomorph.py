"""Subdivisions of a base graph described by per-edge segment lengths.

A homeomorph of a base graph is fixed by a :class:`LengthVector`: base edge
``e`` is replaced by a path of ``lengths[e]`` edges. This module converts in
both directions, enumerates the segment-level paths and cycles of the base,
and evaluates the three segment conditions used to certify geodeticity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from geodetic_lab.errors import (
    Disconnected,
    DomainMismatch,
    MultiEdgeCollapse,
    NoNodes,
    NotMooreBase,
    PendantVertex,
    SelfLoop,
    FormatError,
)
from geodetic_lab.graph import Graph, by_name, from_edge_list
from geodetic_lab.paths import bfs_counts, distance_data
from geodetic_lab.predicates import is_connected, is_geodetic, moore_params


@dataclass(frozen=True)
class LengthVector:
    """Segment length per base edge, in the base's canonical edge order."""

    lengths: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(int(x) for x in self.lengths))
        if any(x < 1 for x in self.lengths):
            raise ValueError(f"segment lengths must be positive: {self.lengths}")

    def __len__(self):
        return len(self.lengths)

    def __getitem__(self, e):
        return self.lengths[e]

    def __iter__(self):
        return iter(self.lengths)

    @classmethod
    def ones(cls, m: int) -> "LengthVector":
        return cls((1,) * m)


@dataclass(frozen=True)
class SegmentCycle:
    """Simple cycle of the base: ``vertices`` in traversal order, ``edges`` the edge indices between them."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def segment_count(self) -> int:
        return len(self.edges)

    def total(self, lv: LengthVector) -> int:
        return sum(lv.lengths[e] for e in self.edges)


@dataclass(frozen=True)
class SegmentPath:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def total(self, lv: LengthVector) -> int:
        return sum(lv.lengths[e] for e in self.edges)


class Skeleton:
    """Base graph in which every vertex is a node, with its Moore diameter ``d0``.

    Cycle and path enumerations are cached per instance.
    """

    def __init__(self, base: Graph, d0: int | None = None, name: str | None = None):
        low = [v for v in range(base.n) if base.degree(v) < 3]
        if low:
            raise NoNodes(f"base vertices {low[:5]} have degree < 3")
        if d0 is None:
            params = moore_params(base)
            if params is None:
                raise NotMooreBase("base is not a Moore graph; pass d0 explicitly")
            d0 = params.d
        if d0 < 1:
            raise ValueError("d0 must be at least 1")
        self.base = base
        self.d0 = d0
        self.name = name
        self._cycles: dict[int, tuple[SegmentCycle, ...]] = {}
        self._paths: dict[int, tuple[SegmentPath, ...]] = {}

    @classmethod
    def moore(cls, base: Graph, name: str | None = None) -> "Skeleton":
        """Skeleton whose ``d0`` is the base's Moore diameter; raises if it has none."""
        params = moore_params(base)
        if params is None:
            raise NotMooreBase(f"{name or base!r} is not a Moore graph")
        return cls(base, params.d, name)

    @classmethod
    def named(cls, name: str) -> "Skeleton":
        return cls.moore(by_name(name), name=name.lower())

    @property
    def edge_count(self) -> int:
        return self.base.edge_count

    def cycles(self, m: int) -> tuple[SegmentCycle, ...]:
        if m not in self._cycles:
            self._cycles[m] = tuple(simple_cycles(self.base, m))
        return self._cycles[m]

    def paths(self, length: int) -> tuple[SegmentPath, ...]:
        if length not in self._paths:
            self._paths[length] = tuple(simple_paths(self.base, length))
        return self._paths[length]

    def is_moore(self) -> bool:
        params = moore_params(self.base)
        return params is not None and params.d == self.d0

    def __repr__(self):
        return f"Skeleton({self.name or self.base!r}, d0={self.d0})"


def _check_domain(base: Graph, lv: LengthVector) -> None:
    if len(lv) != base.edge_count:
        raise DomainMismatch(f"length vector has {len(lv)} entries, base has {base.edge_count} edges")


def realize(skeleton: Skeleton | Graph, lv: LengthVector) -> Graph:
    """Subdivide each base edge ``e = (u, v)`` into ``lv[e]`` edges.

    Base vertices keep labels ``0..n_base-1``; interior vertices are appended
    edge by edge in canonical edge order, running from ``u`` to ``v``.
    """
    base = skeleton.base if isinstance(skeleton, Skeleton) else skeleton
    _check_domain(base, lv)
    edges = []
    nxt = base.n
    for (u, v), length in zip(base.edges, lv.lengths):
        prev = u
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, v))
    return from_edge_list(edges, nxt)


def skeletonize(g: Graph) -> tuple[Graph, LengthVector]:
    """Smooth away every degree-2 vertex.

    Nodes (degree >= 3) are relabelled ``0..m-1`` in increasing order, so a
    graph produced by :func:`realize` comes back with its base labels intact.
    """
    if not is_connected(g):
        raise Disconnected("skeletonize needs a connected graph")
    for v in range(g.n):
        if g.degree(v) == 1:
            raise PendantVertex(v)
    nodes = [v for v in range(g.n) if g.degree(v) >= 3]
    if not nodes:
        raise NoNodes("graph has no vertex of degree >= 3")
    label = {v: i for i, v in enumerate(nodes)}
    segments: dict[tuple[int, int], int] = {}
    used_first_steps: set[tuple[int, int]] = set()
    for a in nodes:
        for first in g.adjacency[a]:
            if (a, first) in used_first_steps:
                continue
            prev, cur, length = a, first, 1
            while cur not in label:
                n0, n1 = g.adjacency[cur]
                prev, cur = cur, (n1 if n0 == prev else n0)
                length += 1
            used_first_steps.add((a, first))
            used_first_steps.add((cur, prev))
            if cur == a:
                raise SelfLoop(label[a])
            key = (min(label[a], label[cur]), max(label[a], label[cur]))
            if key in segments:
                raise MultiEdgeCollapse(nodes[key[0]], nodes[key[1]])
            segments[key] = length
    base = from_edge_list(segments.keys(), len(nodes))
    return base, LengthVector(tuple(segments[e] for e in base.edges))


def simple_cycles(g: Graph, m: int) -> Iterator[SegmentCycle]:
    """Every simple cycle with exactly ``m`` edges, once each.

    A cycle is reported from its smallest vertex, in the direction whose
    second vertex is smaller than its last.
    """
    if m < 3:
        raise ValueError("cycles need at least 3 edges")
    adj = g.adjacency
    eidx = g.edge_index
    for s in range(g.n):
        stack = [s]
        on_path = {s}

        def extend():
            u = stack[-1]
            if len(stack) == m:
                if g.has_edge(u, s) and stack[1] < stack[-1]:
                    verts = tuple(stack)
                    yield SegmentCycle(
                        verts, tuple(eidx[(verts[i], verts[(i + 1) % m])] for i in range(m))
                    )
                return
            for v in adj[u]:
                if v > s and v not in on_path:
                    stack.append(v)
                    on_path.add(v)
                    yield from extend()
                    on_path.discard(v)
                    stack.pop()

        yield from extend()


def simple_paths(g: Graph, length: int) -> Iterator[SegmentPath]:
    """Every simple path with ``length`` edges, once each (first vertex < last vertex)."""
    if length < 1:
        raise ValueError("paths need at least one edge")
    adj = g.adjacency
    eidx = g.edge_index
    for s in range(g.n):
        stack = [s]
        on_path = {s}

        def extend():
            u = stack[-1]
            if len(stack) == length + 1:
                if s < u:
                    verts = tuple(stack)
                    yield SegmentPath(verts, tuple(eidx[(verts[i], verts[i + 1])] for i in range(length)))
                return
            for v in adj[u]:
                if v not in on_path:
                    stack.append(v)
                    on_path.add(v)
                    yield from extend()
                    on_path.discard(v)
                    stack.pop()

        yield from extend()


def segment_cycles(skeleton: Skeleton, m: int) -> tuple[SegmentCycle, ...]:
    return skeleton.cycles(m)


def segment_paths(skeleton: Skeleton, d0: int) -> tuple[SegmentPath, ...]:
    return skeleton.paths(d0)


@dataclass(frozen=True)
class ConditionVerdict:
    passed: bool
    witnesses: tuple = ()
    detail: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed


def node_distances(skeleton: Skeleton, lv: LengthVector, realized: Graph | None = None) -> list[list[int]]:
    """Distances in the realization between base vertices only."""
    g = realized if realized is not None else realize(skeleton, lv)
    nb = skeleton.base.n
    return [bfs_counts(g, a)[0][:nb] for a in range(nb)]


def check_c1(skeleton: Skeleton, lv: LengthVector, realized: Graph | None = None) -> ConditionVerdict:
    """Every base path of ``d0`` segments must be a shortest path in the realization."""
    dist = node_distances(skeleton, lv, realized)
    bad = []
    for p in skeleton.paths(skeleton.d0):
        total = p.total(lv)
        if total != dist[p.vertices[0]][p.vertices[-1]]:
            bad.append((p, total, dist[p.vertices[0]][p.vertices[-1]]))
    return ConditionVerdict(not bad, tuple(bad))


def check_c2(skeleton: Skeleton, lv: LengthVector) -> ConditionVerdict:
    """Every cycle of ``2*d0 + 1`` segments must have odd total length."""
    _check_domain(skeleton.base, lv)
    bad = tuple(c for c in skeleton.cycles(2 * skeleton.d0 + 1) if c.total(lv) % 2 == 0)
    return ConditionVerdict(not bad, bad)


def check_c3(skeleton: Skeleton, lv: LengthVector) -> ConditionVerdict:
    """All cycles of ``2*d0 + 2`` segments must share one total length.

    On failure the witnesses are one representative cycle per distinct total,
    and ``detail["sums"]`` maps each total to how many cycles reach it.
    """
    _check_domain(skeleton.base, lv)
    reps: dict[int, SegmentCycle] = {}
    tally: dict[int, int] = {}
    for c in skeleton.cycles(2 * skeleton.d0 + 2):
        t = c.total(lv)
        reps.setdefault(t, c)
        tally[t] = tally.get(t, 0) + 1
    passed = len(reps) <= 1
    return ConditionVerdict(
        passed,
        () if passed else tuple(reps[t] for t in sorted(reps)),
        {"sums": dict(sorted(tally.items()))},
    )


@dataclass(frozen=True)
class ConditionReport:
    c1: ConditionVerdict
    c2: ConditionVerdict
    c3: ConditionVerdict
    diameter: int
    geodetic: bool
    geodetic_witness: tuple[int, int] | None

    @property
    def conditions_hold(self) -> bool:
        return self.c1.passed and self.c2.passed and self.c3.passed

    def to_dict(self) -> dict:
        return {
            "c1": self.c1.passed,
            "c1_violations": [
                {"path": list(p.vertices), "length": total, "distance": d}
                for p, total, d in self.c1.witnesses
            ],
            "c2": self.c2.passed,
            "c2_violations": [list(c.vertices) for c in self.c2.witnesses],
            "c3": self.c3.passed,
            "c3_sums": {str(k): v for k, v in self.c3.detail.get("sums", {}).items()},
            "conditions_hold": self.conditions_hold,
            "diameter": self.diameter,
            "geodetic": self.geodetic,
            "geodetic_witness": list(self.geodetic_witness) if self.geodetic_witness else None,
        }


def check_all_conditions(skeleton: Skeleton, lv: LengthVector) -> ConditionReport:
    g = realize(skeleton, lv)
    dd = distance_data(g)
    verdict = is_geodetic(g, dd)
    return ConditionReport(
        c1=check_c1(skeleton, lv, g),
        c2=check_c2(skeleton, lv),
        c3=check_c3(skeleton, lv),
        diameter=dd.max_distance(),
        geodetic=verdict.geodetic,
        geodetic_witness=verdict.witness,
    )


# -- length-vector text / JSON forms --------------------------------------------

def format_lengths(base: Graph, lv: LengthVector) -> str:
    _check_domain(base, lv)
    return "".join(f"{u} {v} {x}\n" for (u, v), x in zip(base.edges, lv.lengths))


def parse_lengths(text: str, base: Graph | None = None) -> tuple[Graph, LengthVector]:
    """Parse ``u v length`` lines. Without ``base`` the edge set defines it."""
    triples = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise FormatError(f"line {lineno}: expected 'u v length', got {raw!r}")
        u, v, x = (int(p) for p in parts)
        triples.append((u, v, x))
    if base is None:
        n = 1 + max((max(u, v) for u, v, _ in triples), default=-1)
        base = from_edge_list([(u, v) for u, v, _ in triples], n)
    lengths = {}
    for u, v, x in triples:
        if (u, v) not in base.edge_index:
            raise DomainMismatch(f"({u}, {v}) is not a base edge")
        lengths[base.edge_index[(u, v)]] = x
    if len(lengths) != base.edge_count:
        raise DomainMismatch(f"{len(lengths)} lengths given for {base.edge_count} edges")
    return base, LengthVector(tuple(lengths[i] for i in range(base.edge_count)))


def lengths_to_json(base_name: str | None, base: Graph, lv: LengthVector) -> str:
    doc = {
        "base": base_name if base_name else [list(e) for e in base.edges],
        "lengths": list(lv.lengths),
    }
    return json.dumps(doc, sort_keys=True)


def lengths_from_json(text: str) -> tuple[Graph, str | None, LengthVector]:
    doc = json.loads(text)
    base_field = doc["base"]
    if isinstance(base_field, str):
        base, name = by_name(base_field), base_field
    else:
        edges = [tuple(e) for e in base_field]
        base, name = from_edge_list(edges, 1 + max(max(e) for e in edges)), None
    lv = LengthVector(tuple(doc["lengths"]))
    _check_domain(base, lv)
    return base, name, lv


def random_lengths(rng, m: int, max_len: int) -> LengthVector:
    return LengthVector(tuple(rng.randint(1, max_len) for _ in range(m)))


def all_vectors(m: int, lo: int, hi: int) -> Iterator[LengthVector]:
    from itertools import product

    for t in product(range(lo, hi + 1), repeat=m):
        yield LengthVector(t)


def as_vector(values: Sequence[int]) -> LengthVector:
    return values if isinstance(values, LengthVector) else LengthVector(tuple(values))
